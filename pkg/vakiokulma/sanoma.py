from dataclasses import fields, is_dataclass
import enum
import functools
import types
from typing import (
  Any,
  Callable,
  ClassVar,
  Mapping,
  Optional,
  Self,
  Union,
  get_args,
  get_origin,
  get_type_hints,
)

import numpy as np

from .tyokalut import Vakio, VirheellinenSyote, ei_syotetty, luokkamaare


class Kentta:
  '''
  Sanomassa vaihdettava kenttä, joka muunnetaan
  automaattisesti lähtiessä ja saapuessa.
  '''

  def lahteva(self) -> Any:
    return self

  @classmethod
  def saapuva(cls, saapuva):
    return saapuva

  # class Kentta


class Valintakentta(Kentta, enum.StrEnum):
  '''
  Kiinteisiin vaihtoehtoihin perustuva kenttä sanomassa.
  '''

  def lahteva(self):
    return str(self)

  @classmethod
  def saapuva(cls, saapuva):
    try:
      return cls(saapuva)
    except ValueError as exc:
      raise VirheellinenSyote(
        f'Tuntematon {cls.__name__}-arvo: {saapuva!r}'
      ) from exc
    # def saapuva

  # class Valintakentta


def _lahteva_arvo(arvo: Any) -> Any:
  ''' Muunna yksittäinen kentän arvo lähtevään muotoon. '''
  if isinstance(arvo, (Kentta, Sanoma)):
    return arvo.lahteva()
  elif isinstance(arvo, Vakio):
    return arvo.nimi
  elif isinstance(arvo, np.ndarray):
    return arvo.tolist()
  elif isinstance(arvo, np.generic):
    return arvo.item()
  elif isinstance(arvo, (list, tuple)):
    return [_lahteva_arvo(alkio) for alkio in arvo]
  elif isinstance(arvo, Mapping):
    return {avain: _lahteva_arvo(alkio) for avain, alkio in arvo.items()}
  return arvo
  # def _lahteva_arvo


class Sanoma(Kentta):
  '''
  Dataclass-sanomaluokan saate, joka sisältää:
  - nimitaulukon `ulkoiset_nimet` (kentän nimi -> ulkoinen avain) sekä
    metodit
  - lähtevän sanoman (`self`) muuntamiseen sanakirjaksi ja
  - saapuvan sanakirjan muuntamiseen `cls`-sanomaksi.

  Kenttiä, joiden nimet on lueteltu `ohitettavat`-joukossa,
  ei välitetä lainkaan.
  '''

  # Kentän nimi sanomassa -> avain lähtevässä / saapuvassa sanakirjassa.
  ulkoiset_nimet: ClassVar[dict[str, str]] = {}

  # Kentät, joita ei välitetä (esim. laskennan sisäiset viittaukset).
  ohitettavat: ClassVar[frozenset[str]] = frozenset()

  @classmethod
  def __poimi_saapuva(cls, tyyppi: Any) -> Optional[Callable]:
    '''
    Päättele kentän tyypin perusteella saapuvan arvon muunnos.

    Käsitellään `Kentta`-aliluokat, `Union`-tyypit (esim.
    `float | Vakio`), luettelot sekä monikot.
    '''
    lahde = get_origin(tyyppi)
    if isinstance(tyyppi, type) and issubclass(tyyppi, Vakio):
      return Vakio.hae
    elif isinstance(tyyppi, type) and issubclass(tyyppi, Kentta):
      return tyyppi.saapuva
    elif lahde in (Union, types.UnionType):
      muunnokset = [
        muunnos
        for vaihtoehto in get_args(tyyppi)
        if vaihtoehto is not type(None)
        and (muunnos := cls.__poimi_saapuva(vaihtoehto)) is not None
      ]
      if not muunnokset:
        return None

      def _union(saapuva):
        if saapuva is None:
          return None
        if (vakio := Vakio.hae(saapuva)) is not saapuva:
          return vakio
        for muunnos in muunnokset:
          if muunnos is Vakio.hae:
            continue
          try:
            return muunnos(saapuva)
          except (TypeError, ValueError):
            pass
        return saapuva
        # def _union
      return _union
    elif lahde in (list, tuple):
      alkiot = [a for a in get_args(tyyppi) if a is not Ellipsis]
      if len(alkiot) == 1 \
      and (muunnos := cls.__poimi_saapuva(alkiot[0])) is not None:
        return functools.partial(
          lambda m, t, saapuva: t(map(m, saapuva)), muunnos, lahde
        )
      return lahde
    return None
    # def __poimi_saapuva

  @luokkamaare
  def _kentat(cls):
    '''
    Muodosta kenttäkohtainen taulukko muotoa
    `nimi: (ulkoinen avain, saapuvan arvon muunnos)`.
    '''
    # pylint: disable=no-self-argument
    if not is_dataclass(cls):
      raise TypeError(f'Sanoma ei ole dataclass-tyyppinen: {cls!r}!')
    tyypit = get_type_hints(cls)
    return {
      kentta.name: (
        cls.ulkoiset_nimet.get(kentta.name, kentta.name),
        cls.__poimi_saapuva(tyypit.get(kentta.name, kentta.type)),
      )
      for kentta in fields(cls)
      if kentta.name not in cls.ohitettavat
    }
    # def _kentat

  def lahteva(self) -> dict[str, Any]:
    '''
    Muunnetaan self-sanoman sisältö sanakirjaksi
    `self.ulkoiset_nimet`-taulukon mukaisesti.
    '''
    if not is_dataclass(self):
      raise TypeError(f'Sanoma ei ole dataclass-tyyppinen: {self!r}!')
    return {
      ulkoinen: _lahteva_arvo(arvo)
      for ulkoinen, arvo in (
        (ulkoinen, getattr(self, nimi))
        for nimi, (ulkoinen, _) in self._kentat.items()
      )
      if arvo is not ei_syotetty
    }
    # def lahteva

  @classmethod
  def saapuva(cls, saapuva: Mapping[str, Any]) -> Self:
    '''
    Muunnetaan saapuvan sanakirjan sisältö `cls`-olioksi
    `cls.ulkoiset_nimet`-taulukon mukaisesti.
    '''
    if not isinstance(saapuva, Mapping):
      raise VirheellinenSyote(
        f'Saapuva data ei ole kuvaus: {type(saapuva)!r}!'
      )
    return cls(**{
      nimi: muunnos(saapuva[ulkoinen]) if muunnos else saapuva[ulkoinen]
      for nimi, (ulkoinen, muunnos) in cls._kentat.items()
      if ulkoinen in saapuva
    })
    # def saapuva

  # class Sanoma
