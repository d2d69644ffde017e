from dataclasses import dataclass
import json
from pathlib import Path
from typing import Any, Mapping, Type, TypeVar

from .sanoma import Sanoma
from .tyokalut import VirheellinenSyote


# Tiedostomuodon versio.
SKEEMA = 1

S = TypeVar('S', bound=Sanoma)


@dataclass(kw_only=True)
class JsonMuoto:
  '''
  JSON-muotoiset sertifikaatit, raportit ja tehtävätiedostot.

  Jokainen asiakirja sisältää kentän `schema: 1`. Liukuluvut
  kirjoitetaan lyhimmässä yksikäsitteisessä muodossa, joten luettu
  arvo on bitilleen sama kuin kirjoitettu.
  '''

  sisennys: int = 2

  class VirheellinenAsiakirja(VirheellinenSyote):
    pass

  def muodosta_data(self, data: Mapping[str, Any]) -> str:
    ''' Muodosta JSON-teksti; `schema` ensimmäisenä avaimena. '''
    try:
      return json.dumps(
        {'schema': SKEEMA, **data},
        indent=self.sisennys,
        ensure_ascii=False,
        allow_nan=False,
      ) + '\n'
    except ValueError as exc:
      raise self.VirheellinenAsiakirja(str(exc)) from exc
    # def muodosta_data

  def tulkitse_data(self, teksti: str) -> dict[str, Any]:
    ''' Tulkitse JSON-teksti ja tarkista sen skeemaversio. '''
    try:
      data = json.loads(teksti)
    except json.JSONDecodeError as exc:
      raise self.VirheellinenAsiakirja(f'Virheellinen JSON: {exc}') from exc
    if not isinstance(data, dict):
      raise self.VirheellinenAsiakirja('Asiakirja ei ole JSON-olio.')
    if (skeema := data.pop('schema', None)) != SKEEMA:
      raise self.VirheellinenAsiakirja(
        f'Tuntematon skeema {skeema!r}; odotettiin {SKEEMA}.'
      )
    return data
    # def tulkitse_data

  def kirjoita(self, polku: str | Path, sanoma: Sanoma):
    Path(polku).write_text(
      self.muodosta_data(sanoma.lahteva()), encoding='utf-8'
    )

  def lue(self, polku: str | Path, tyyppi: Type[S]) -> S:
    try:
      teksti = Path(polku).read_text(encoding='utf-8')
    except OSError as exc:
      raise self.VirheellinenAsiakirja(f'{polku}: {exc}') from exc
    return tyyppi.saapuva(self.tulkitse_data(teksti))
    # def lue

  # class JsonMuoto
