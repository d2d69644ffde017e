import functools
import logging
from time import time
from typing import Any, ClassVar, TypeVar, Union

import numpy as np


logger = logging.getLogger(__name__)


class Poikkeus(Exception):
  ''' Kirjaston kaikkien poikkeusten kantaluokka. '''


class VirheellinenSyote(Poikkeus, ValueError):
  ''' Syötetty arvo tai malli on virheellinen (komentorivillä paluuarvo 2). '''


class LaskentaVirhe(Poikkeus, RuntimeError):
  ''' Laskenta epäonnistui suorituksen aikana (komentorivillä paluuarvo 3). '''


def mittaa(f):
  '''
  Mittaa ja raportoi metodin suoritukseen kulunut aika.

  Kesto kirjataan aina DEBUG-tasolla. Lisäksi kutsutaan
  `self.mittaa_laskenta`-rutiinia, mikäli se on asetettu.

  Käyttö seuraavasti:
  >>> @dataclass
  ... class Luokka:
  ...   mittaa_laskenta: Optional[Callable] = None
  ...   @mittaa
  ...   def metodi(self):
  ...     time.sleep(1)
  >>>
  >>> Luokka(mittaa_laskenta=lambda f, args, aika: print(aika)).metodi()
  '''
  # pylint: disable=invalid-name
  @functools.wraps(f)
  def _f(self, *args, **kwargs):
    alku = time()
    try:
      return f(self, *args, **kwargs)
    finally:
      kesto = time() - alku
      logger.debug('%s: %.6f s', f.__qualname__, kesto)
      if mittaa_laskenta := getattr(self, 'mittaa_laskenta', None):
        mittaa_laskenta(f, args, kesto)
    # def _f
  return _f
  # def mittaa


def kaanna_poikkeus(f):
  '''
  Käännä metodin aikana nousevat laskentavirheet `self.Poikkeus`-tyyppisiksi.

  Numpyn liukulukuvirheet nostetaan poikkeuksina (`np.errstate`),
  ja epä-äärellinen tulos tulkitaan myös virheeksi.

  Käyttö seuraavasti:
  >>> class Luokka:
  ...   class Poikkeus(LaskentaVirhe):
  ...     pass
  ...   @kaanna_poikkeus
  ...   def metodi(self, x):
  ...     return np.log(x)
  >>>
  >>> Luokka().metodi(np.array([-1.0]))  # Nostaa `Luokka.Poikkeuksen`.
  '''
  # pylint: disable=invalid-name
  @functools.wraps(f)
  def kaannetty(self, *args, **kwargs):
    try:
      with np.errstate(divide='raise', over='raise', invalid='raise'):
        tulos = kaannetty.__wrapped__(self, *args, **kwargs)
    except (ArithmeticError, ValueError, TypeError) as exc:
      raise self.Poikkeus(f'{f.__name__}: {exc}') from exc
    if not np.all(np.isfinite(tulos)):
      raise self.Poikkeus(f'{f.__name__}: epä-äärellinen arvo')
    return tulos
    # def kaannetty
  return kaannetty
  # def kaanna_poikkeus


@type.__call__
class ei_syotetty:
  ''' Arvo, jota ei syötetty. Käyttäytyy kuten ei olisikaan. '''
  # pylint: disable=invalid-name

  EI_SYOTETTY = None

  def __new__(cls):
    if cls.EI_SYOTETTY is None:
      cls.EI_SYOTETTY = super().__new__(cls)
    return cls.EI_SYOTETTY

  def __bool__(self):
    return False

  def __or__(self, arg):
    return arg

  def __repr__(self):
    return '<ei syötetty>'

  # class ei_syotetty


Valinnainen = Union[TypeVar('T'), type(ei_syotetty)]


class Vakio:
  '''
  Nimetty erikoisarvo, esim. puuttuva juuri tai rajaton yläraja.

  Kutakin nimeä vastaa täsmälleen yksi olio, joten vertailu
  tehdään `is`-operaattorilla. Arvo on epätosi.

  Käyttö seuraavasti:
  >>> puuttuu = Vakio('absent')
  >>> assert Vakio('absent') is puuttuu
  >>> assert not puuttuu
  '''

  _vakiot: ClassVar[dict[str, 'Vakio']] = {}
  nimi: str

  def __new__(cls, nimi: str):
    if (vakio := cls._vakiot.get(nimi)) is None:
      vakio = cls._vakiot[nimi] = super().__new__(cls)
      vakio.nimi = nimi
    return vakio
    # def __new__

  def __bool__(self):
    return False

  def __repr__(self):
    return f'<{self.nimi}>'

  def __reduce__(self):
    return (Vakio, (self.nimi,))

  @classmethod
  def hae(cls, nimi: Any) -> Any:
    ''' Palauta nimeä vastaava vakio tai arvo sellaisenaan. '''
    if isinstance(nimi, str):
      return cls._vakiot.get(nimi, nimi)
    return nimi
    # def hae

  # class Vakio


puuttuu = Vakio('absent')
reunalla = Vakio('at_boundary')
rajaton = Vakio('unbounded')
ei_sovellettavissa = Vakio('not_applicable')


class luokkamaare:
  '''
  Määreenä käytettävä luokkametodi.

  Käyttö seuraavasti:
  >>> class Luokka:
  ...   @luokkamaare
  ...   def maare(cls):
  ...     return 42
  >>>
  >>> assert Luokka.maare == 42
  '''
  # pylint: disable=invalid-name

  def __init__(self, luokkametodi):
    self.luokkametodi = luokkametodi

  def __get__(self, instance, cls=None):
    return self.luokkametodi(cls)

  # class luokkamaare


class Rutiini:
  '''
  Datatyypin oletusarvona käytettävä kuvaaja silloin, kun tyyppinä on metodi.

  Käyttö seuraavasti:
  >>> from dataclasses import dataclass, field
  >>> from typing import Protocol
  >>>
  >>> class Kahva(Protocol):
  ...   def __call__(self, *, k: int, askel: float):
  ...     ...
  >>>
  >>> class Oletuskahva(Kahva, Rutiini):
  ...   @staticmethod  # Huomaa, että `self` viittaa tässä `Dataluokkaan`.
  ...   def __call__(self, *, k: int, askel: float):
  ...     print(k, '=', askel)
  >>>
  >>> @dataclass
  ... class Dataluokka:
  ...   kahva: Kahva = field(default=Oletuskahva())
  ...   def tulosta(self):
  ...     self.kahva(k=1, askel=0.5)
  >>>
  >>> def mukautettu(self, k, askel):
  ...   print('iteraatio', k, 'askel', askel)
  >>>
  >>> Dataluokka().tulosta()  # Vakiotuloste.
  >>> Dataluokka(kahva=mukautettu).tulosta()  # Mukautettu tuloste.
  '''
  _name: str

  def __set_name__(self, owner, name):
    self._name = "_" + name

  def __get__(self, instance, cls=None):
    return functools.partial(
      getattr(instance, self._name, self),
      self=instance
    )
    # def __get__

  def __set__(self, instance, value):
    setattr(instance, self._name, value)
    # def __set__

  @staticmethod
  def __call__(self, *args, **kwargs):
    # pylint: disable=bad-staticmethod-argument
    raise NotImplementedError

  # class Rutiini
