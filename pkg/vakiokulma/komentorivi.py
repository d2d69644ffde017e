'''
Komentorivikäyttöliittymä.

  vakiokulma certify scalar_quadratic c=2 x0=2 b=0.25 R=10
  vakiokulma solve linear --trace jalki.csv --report yhteenveto.json
  vakiokulma compare l0=1 alpha=1 nu=0 eta=0.3 R=10
  vakiokulma estimate-omega poly2d --mode Centered
  vakiokulma list-problems

Paluuarvot: 0 onnistui, 1 ei sertifioitu (vain certify),
2 virheellinen syöte, 3 laskentavirhe.
'''

import argparse
import csv
from dataclasses import dataclass, field
import io
import logging
from pathlib import Path
import sys
from typing import Any, Sequence

from .json import JsonMuoto
from .majorantti import JUURITOLERANSSI, MajoranttiMalli, TaulukoituMitta
from .normit import Normi
from .ratkaisija import (
  OLETUSSIEMEN,
  MajorointiRaportti,
  Ratkaisija,
  Tapa,
  Tehtava,
  YksikasitteisyysRaportti,
  arvioi_omega,
  sertifioi_arvioiduilla,
  tarkista_majorointi,
)
from .sanoma import Sanoma, Valintakentta
from .sertifikaatti import (
  HolderParametrit,
  Sertifikaatti,
  Syy,
  Tila,
  sertifioi,
)
from .tehtavat import TehtavaKuvaus, luettelo
from .tyokalut import (
  LaskentaVirhe,
  Valinnainen,
  Vakio,
  VirheellinenSyote,
  ei_syotetty,
  puuttuu,
)
from .vertailu import vertaa


logger = logging.getLogger(__name__)


JALJEN_OTSAKE = (
  'k', 'step_norm', 'residual_norm', 'v_step', 'bound_slack', 'error_bound',
)


class Alikomento(Valintakentta):
  SERTIFIOI = 'certify'
  RATKAISE = 'solve'
  VERTAA = 'compare'
  ARVIOI = 'estimate-omega'
  LUETTELE = 'list-problems'


class VirheellinenKomento(VirheellinenSyote):
  pass


def tulkitse_arvo(teksti: str) -> Any:
  '''
  Tulkitse parametrin arvo: `;` erottaa matriisin rivit ja `,`
  luettelon alkiot; muut arvot luetaan liukulukuina.
  '''
  try:
    if ';' in teksti:
      return [
        [float(alkio) for alkio in rivi.split(',')]
        for rivi in teksti.split(';')
      ]
    elif ',' in teksti:
      return [float(alkio) for alkio in teksti.split(',')]
    return float(teksti)
  except ValueError:
    raise VirheellinenKomento(f'Virheellinen numeroarvo: {teksti!r}') from None
  # def tulkitse_arvo


def tulkitse_maareet(maareet: Sequence[str]) -> dict[str, Any]:
  ''' Muunna `avain=arvo`-määreet sanakirjaksi. '''
  tulos = {}
  for maare in maareet:
    avain, erotin, arvo = maare.partition('=')
    if not erotin or not avain:
      raise VirheellinenKomento(f'Odotettiin muotoa avain=arvo: {maare!r}')
    tulos[avain] = tulkitse_arvo(arvo)
  return tulos
  # def tulkitse_maareet


@dataclass(kw_only=True)
class Ajoasetukset:
  ''' Yksittäisen komentoriviajon asetukset. '''

  alikomento: Alikomento
  tehtava: Valinnainen[TehtavaKuvaus] = ei_syotetty
  parametrit: dict[str, Any] = field(default_factory=dict)

  tol_askel: float = 1e-12
  tol_jaannos: float = 1e-12
  juuritoleranssi: float = JUURITOLERANSSI
  marginaalitoleranssi: float = 1e-9
  max_iter: int = 10000
  siemen: int = OLETUSSIEMEN
  lahtoja: int = 0
  naytteita: int = 64
  tapa: Tapa = Tapa.SUORA
  sateet: Valinnainen[list[float]] = ei_syotetty

  sertifikaatti_polku: Valinnainen[Path] = ei_syotetty
  jalki_polku: Valinnainen[Path] = ei_syotetty
  raportti_polku: Valinnainen[Path] = ei_syotetty

  debug: bool = False

  def __post_init__(self):
    if min(
      self.tol_askel, self.tol_jaannos,
      self.juuritoleranssi, self.marginaalitoleranssi,
    ) <= 0:
      raise VirheellinenKomento('Toleranssien on oltava positiivisia.')
    if self.max_iter < 1 or self.naytteita < 1 or self.lahtoja < 0:
      raise VirheellinenKomento(
        'max-iter ja samples ovat positiivisia, num-starts ei-negatiivinen.'
      )
    # def __post_init__

  @classmethod
  def komentorivilta(cls, argv: Sequence[str]) -> 'Ajoasetukset':
    ''' Tulkitse komentoriviparametrit. '''
    args = jasentaja().parse_args(argv)
    alikomento = Alikomento(args.alikomento)
    maareet = list(args.maareet)
    tehtava = ei_syotetty
    if alikomento in (
      Alikomento.SERTIFIOI, Alikomento.RATKAISE, Alikomento.ARVIOI
    ):
      tehtava = _tehtava(args, maareet)
      maareet = []
    return cls(
      alikomento=alikomento,
      tehtava=tehtava,
      parametrit=tulkitse_maareet(maareet),
      tol_askel=args.tol_step,
      tol_jaannos=args.tol_residual,
      juuritoleranssi=args.root_tol,
      marginaalitoleranssi=args.slack_tol,
      max_iter=args.max_iter,
      siemen=args.seed,
      lahtoja=args.num_starts,
      naytteita=args.samples,
      tapa=Tapa.saapuva(args.mode),
      sateet=(
        ei_syotetty if args.radii is None
        else [tulkitse_arvo(r) for r in args.radii.split(',')]
      ),
      sertifikaatti_polku=args.certificate or ei_syotetty,
      jalki_polku=args.trace or ei_syotetty,
      raportti_polku=args.report or ei_syotetty,
      debug=args.debug,
    )
    # def komentorivilta

  # class Ajoasetukset


def _tehtava(args, maareet: list[str]) -> TehtavaKuvaus:
  ''' Tehtävä joko tiedostosta (--problem) tai nimenä ja määreinä. '''
  if args.problem:
    if maareet:
      raise VirheellinenKomento('Anna joko --problem tai tehtävän nimi.')
    kuvaus = JsonMuoto().lue(args.problem, TehtavaKuvaus)
    if args.norm:
      kuvaus = TehtavaKuvaus(
        nimi=kuvaus.nimi,
        parametrit=kuvaus.parametrit,
        normi=Normi.saapuva(args.norm),
        R=kuvaus.R,
      )
    return kuvaus
  if not maareet or '=' in maareet[0]:
    raise VirheellinenKomento('Tehtävän nimi puuttuu.')
  parametrit = tulkitse_maareet(maareet[1:])
  R = parametrit.pop('R', ei_syotetty)
  return TehtavaKuvaus(
    nimi=maareet[0],
    parametrit=parametrit,
    normi=Normi.saapuva(args.norm or Normi.MAKSIMI),
    R=R,
  )
  # def _tehtava


def jasentaja() -> argparse.ArgumentParser:
  yhteiset = argparse.ArgumentParser(add_help=False)
  yhteiset.add_argument('maareet', nargs='*', metavar='NIMI|AVAIN=ARVO')
  yhteiset.add_argument('--problem', type=Path, help='tehtävätiedosto (JSON)')
  yhteiset.add_argument('--norm', choices=[str(n) for n in Normi])
  yhteiset.add_argument('--tol-step', type=float, default=1e-12)
  yhteiset.add_argument('--tol-residual', type=float, default=1e-12)
  yhteiset.add_argument('--root-tol', type=float, default=JUURITOLERANSSI)
  yhteiset.add_argument('--slack-tol', type=float, default=1e-9)
  yhteiset.add_argument('--max-iter', type=int, default=10000)
  yhteiset.add_argument('--seed', type=int, default=OLETUSSIEMEN)
  yhteiset.add_argument(
    '--num-starts', type=int, default=0,
    help='yksikäsitteisyyskokeen lähtöpisteiden määrä (solve)',
  )
  yhteiset.add_argument('--samples', type=int, default=64)
  yhteiset.add_argument(
    '--mode', choices=[str(t) for t in Tapa], default=str(Tapa.SUORA)
  )
  yhteiset.add_argument('--radii', help='pilkuin erotellut säteet')
  yhteiset.add_argument('--certificate', type=Path)
  yhteiset.add_argument('--trace', type=Path)
  yhteiset.add_argument('--report', type=Path)
  yhteiset.add_argument('--debug', action='store_true')

  jasentaja_ = argparse.ArgumentParser(
    prog='vakiokulma',
    description='Kiinteän kulmakertoimen iteraatio ja sen sertifiointi.',
  )
  alikomennot = jasentaja_.add_subparsers(dest='alikomento', required=True)
  for alikomento in Alikomento:
    alikomennot.add_parser(str(alikomento), parents=[yhteiset])
  return jasentaja_
  # def jasentaja


def _kirjoita(polku: Valinnainen[Path], teksti: str):
  ''' Kirjoita tiedostoon tai, mikäli polkua ei annettu, vakiotulosteeseen. '''
  if polku is ei_syotetty:
    sys.stdout.write(teksti)
  else:
    polku.write_text(teksti, encoding='utf-8')
  # def _kirjoita


def _csv(otsake: Sequence[str], rivit) -> str:
  puskuri = io.StringIO()
  kirjoitin = csv.writer(puskuri, lineterminator='\n')
  kirjoitin.writerow(otsake)
  kirjoitin.writerows(rivit)
  return puskuri.getvalue()
  # def _csv


def sertifioi_tehtava(
  tehtava: Tehtava,
  analyyttinen,
  asetukset: Ajoasetukset,
) -> Sertifikaatti:
  '''
  Sertifioi tehtävä analyyttisella mitalla, mikäli tehtävä sellaisen
  tarjoaa, muuten keskitetyllä arviolla, johon lisätään ν.

  Mikäli η = 0 (x0 on jo ratkaisu), majoranttia ei muodosteta ja
  palautetaan ei-sertifioitu sertifikaatti syyllä InitialPointIsRoot.
  '''
  eta, R = tehtava.eta(), tehtava.R
  if eta == 0:
    logger.info('η = 0: lähtöpiste on ratkaisu, sertifiointi ohitetaan.')
    return Sertifikaatti(
      tila=Tila.EI_SERTIFIOITU,
      syy=Syy.LAHTOPISTE_ON_RATKAISU,
      nu=tehtava.nu(),
      eta=eta,
      R=R,
    )
  if analyyttinen is puuttuu:
    return sertifioi_arvioiduilla(
      tehtava,
      asetukset.sateet,
      asetukset.naytteita,
      asetukset.siemen,
      asetukset.juuritoleranssi,
    )
  return sertifioi(
    MajoranttiMalli(eta=eta, R=R, omega=analyyttinen.mitta()),
    asetukset.juuritoleranssi,
  )
  # def sertifioi_tehtava


@dataclass(frozen=True, kw_only=True)
class RatkaisuRaportti(Sanoma):
  ''' Ratkaisuajon yhteenveto. '''

  ulkoiset_nimet = {
    'syy': 'stop_reason',
    'askelia': 'steps',
    'ratkaisu': 'solution',
    'jaannos': 'residual_norm',
    'sertifikaatti': 'certificate_status',
    'majorointi': 'majorization',
    'yksikasitteisyys': 'uniqueness_probe',
  }

  syy: str
  askelia: int
  ratkaisu: tuple[float, ...]
  jaannos: float
  sertifikaatti: Tila
  majorointi: MajorointiRaportti | Vakio = puuttuu
  yksikasitteisyys: YksikasitteisyysRaportti | Vakio = puuttuu

  # class RatkaisuRaportti


def _sertifioi(asetukset: Ajoasetukset) -> int:
  tehtava, analyyttinen = asetukset.tehtava.rakenna()
  sertifikaatti = sertifioi_tehtava(tehtava, analyyttinen, asetukset)
  _kirjoita(
    asetukset.sertifikaatti_polku,
    JsonMuoto().muodosta_data(sertifikaatti.lahteva()),
  )
  return 0 if sertifikaatti.sertifioitu else 1
  # def _sertifioi


def _ratkaise(asetukset: Ajoasetukset) -> int:
  tehtava, analyyttinen = asetukset.tehtava.rakenna()
  sertifikaatti = sertifioi_tehtava(tehtava, analyyttinen, asetukset)
  ratkaisija = Ratkaisija(
    tol_askel=asetukset.tol_askel,
    tol_jaannos=asetukset.tol_jaannos,
    max_iter=asetukset.max_iter,
  )
  x, jalki = ratkaisija.ratkaise(
    tehtava,
    sertifikaatti if sertifikaatti.sertifioitu else ei_syotetty,
  )
  majorointi = yksikasitteisyys = puuttuu
  if sertifikaatti.sertifioitu and jalki.askelia:
    majorointi = tarkista_majorointi(
      jalki, sertifikaatti, asetukset.marginaalitoleranssi
    )
    if asetukset.lahtoja:
      yksikasitteisyys = ratkaisija.yksikasitteisyyskoe(
        tehtava, sertifikaatti, asetukset.lahtoja, asetukset.siemen
      )
  _kirjoita(asetukset.jalki_polku, _csv(JALJEN_OTSAKE, jalki.rivit()))
  _kirjoita(
    asetukset.raportti_polku,
    JsonMuoto().muodosta_data(RatkaisuRaportti(
      syy=str(jalki.syy),
      askelia=jalki.askelia,
      ratkaisu=tuple(map(float, x)),
      jaannos=jalki.jaannokset[-1],
      sertifikaatti=sertifikaatti.tila,
      majorointi=majorointi,
      yksikasitteisyys=yksikasitteisyys,
    ).lahteva()),
  )
  return 0
  # def _ratkaise


def _vertaa(asetukset: Ajoasetukset) -> int:
  parametrit = dict(asetukset.parametrit)
  try:
    R = parametrit.pop('R')
    delta = parametrit.pop('delta', ei_syotetty)
    p = HolderParametrit(**parametrit)
  except (KeyError, TypeError) as exc:
    raise VirheellinenKomento(
      f'compare vaatii parametrit l0, eta, R (sekä valinnaiset alpha,'
      f' nu, delta): {exc}'
    ) from None
  raportti = vertaa(p, R, asetukset.juuritoleranssi, delta)
  sys.stdout.write(raportti.taulukko())
  if asetukset.raportti_polku is not ei_syotetty:
    _kirjoita(
      asetukset.raportti_polku,
      JsonMuoto().muodosta_data(raportti.lahteva()),
    )
  return 0
  # def _vertaa


def _arvioi(asetukset: Ajoasetukset) -> int:
  tehtava, _ = asetukset.tehtava.rakenna()
  mitta: TaulukoituMitta = arvioi_omega(
    tehtava,
    asetukset.tapa,
    asetukset.sateet,
    asetukset.naytteita,
    asetukset.siemen,
  )
  _kirjoita(asetukset.raportti_polku, _csv(('radius', 'value'), mitta.solmut))
  return 0
  # def _arvioi


def _luettele(asetukset: Ajoasetukset) -> int:
  # pylint: disable=unused-argument
  def _arvo(arvo):
    if arvo is ei_syotetty:
      return '(x0 = 0)'
    return str(arvo)
  for rakentaja in luettelo():
    sys.stdout.write(f'{rakentaja.nimi}: {rakentaja.kuvaus}\n')
    for avain, arvo in (*rakentaja.oletukset.items(), ('R', rakentaja.R)):
      sys.stdout.write(f'  {avain} = {_arvo(arvo)}\n')
  return 0
  # def _luettele


TOIMINNOT = {
  Alikomento.SERTIFIOI: _sertifioi,
  Alikomento.RATKAISE: _ratkaise,
  Alikomento.VERTAA: _vertaa,
  Alikomento.ARVIOI: _arvioi,
  Alikomento.LUETTELE: _luettele,
}


def suorita(asetukset: Ajoasetukset) -> int:
  ''' Suorita ajo ja palauta paluuarvo. '''
  try:
    return TOIMINNOT[asetukset.alikomento](asetukset)
  except VirheellinenSyote as exc:
    logger.error('Virheellinen syöte: %s', exc)
    return 2
  except LaskentaVirhe as exc:
    logger.error('Laskenta epäonnistui: %s', exc)
    return 3
  # def suorita


def paaohjelma(argv: Sequence[str] | None = None) -> int:
  argv = sys.argv[1:] if argv is None else list(argv)
  logging.basicConfig(
    stream=sys.stderr,
    level=logging.DEBUG if '--debug' in argv else logging.WARNING,
    format='%(levelname)s %(name)s: %(message)s',
  )
  try:
    asetukset = Ajoasetukset.komentorivilta(argv)
  except VirheellinenSyote as exc:
    logger.error('Virheellinen syöte: %s', exc)
    return 2
  return suorita(asetukset)
  # def paaohjelma
