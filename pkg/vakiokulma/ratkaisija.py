'''
Kiinteän kulmakertoimen iteraatio x_{k+1} = x_k - B·F(x_k) äärellis-
ulotteisille tehtäville, iteraatiojäljen majorointitarkistus,
jatkuvuusmitan empiirinen arviointi sekä yksikäsitteisyyskoe.

Kulmakerrointa B ei koskaan käännetä eikä hajoteta: iteraatio
käyttää ainoastaan matriisi-vektoritulon B @ F(x).
'''

from dataclasses import dataclass, field
import itertools
import logging
import math
from typing import Callable, Optional, Protocol, Sequence

import numpy as np

from .majorantti import (
  JUURITOLERANSSI,
  MajoranttiMalli,
  Mitta,
  TaulukoituMitta,
  yhdista_mitat,
)
from .normit import Normi
from .sanoma import Sanoma, Valintakentta
from .sertifikaatti import Sertifikaatti, sertifioi
from .tyokalut import (
  LaskentaVirhe,
  Poikkeus,
  Rutiini,
  Valinnainen,
  Vakio,
  VirheellinenSyote,
  ei_syotetty,
  kaanna_poikkeus,
  mittaa,
  puuttuu,
)


logger = logging.getLogger(__name__)


# Iteraatiota ei katsota palloon kuuluvaksi, kun etäisyys ylittää
# säteen enemmän kuin tämän suhteellisen toleranssin verran.
PALLOTOLERANSSI = 1e-9

# Satunnaislukujen oletussiemen (toistettavat ajot).
OLETUSSIEMEN = 2024

# Yksikäsitteisyyskokeen lähtöpisteet poimitaan pallosta,
# jonka säde on λ*·(1 - SISAMARGINAALI).
SISAMARGINAALI = 1e-6


class Pysahtyminen(Valintakentta):
  ''' Iteraation pysähtymisen syy. '''
  ASKEL = 'StepTol'
  JAANNOS = 'ResidualTol'
  MAKSIMI = 'MaxIter'
  POISTUI = 'LeftBall'


class Tapa(Valintakentta):
  '''
  Jatkuvuusmitan arviointitapa:
  - suora: ||B·F'(x) - I||
  - keskitetty: ||B·(F'(x) - F'(x0))||
  '''
  SUORA = 'Direct'
  KESKITETTY = 'Centered'


@dataclass(kw_only=True, eq=False)
class Tehtava:
  '''
  Yhtälö F(x) = 0 avaruudessa R^n: kuvaus F, valinnainen Jacobiaani,
  kiinteä kulmakerroin B, lähtöpiste x0 sekä luottamussäde R.
  '''

  F: Callable[[np.ndarray], np.ndarray]
  B: np.ndarray
  x0: np.ndarray
  R: float
  jacobiaani: Optional[Callable[[np.ndarray], np.ndarray]] = None
  normi: Normi = Normi.MAKSIMI

  class VirheellinenTehtava(VirheellinenSyote):
    pass

  class ArviointiEpaonnistui(LaskentaVirhe):
    ''' F tai Jacobiaani ei palauttanut äärellistä arvoa. '''

  class JacobiaaniPuuttuu(VirheellinenSyote):
    pass

  # `kaanna_poikkeus` nostaa tämän tyyppisen poikkeuksen.
  Poikkeus = ArviointiEpaonnistui

  def __post_init__(self):
    self.x0 = np.atleast_1d(np.asarray(self.x0, dtype=float))
    self.B = np.atleast_2d(np.asarray(self.B, dtype=float))
    if self.x0.ndim != 1:
      raise self.VirheellinenTehtava(f'x0 ei ole vektori: {self.x0!r}')
    if self.B.shape != (self.dim, self.dim):
      raise self.VirheellinenTehtava(
        f'B:n muoto {self.B.shape} ei vastaa dimensiota {self.dim}.'
      )
    if not (math.isfinite(self.R) and self.R > 0):
      raise self.VirheellinenTehtava(f'R = {self.R!r}; vaaditaan R > 0.')
    self.normi = Normi.saapuva(self.normi)
    # def __post_init__

  @property
  def dim(self) -> int:
    return self.x0.size

  @kaanna_poikkeus
  def arvo(self, x: np.ndarray) -> np.ndarray:
    ''' F(x) vektorina. '''
    tulos = np.atleast_1d(np.asarray(self.F(x), dtype=float))
    if tulos.shape != (self.dim,):
      raise ValueError(f'F palautti muodon {tulos.shape}')
    return tulos
    # def arvo

  @kaanna_poikkeus
  def _jacobiaanin_arvo(self, x: np.ndarray) -> np.ndarray:
    tulos = np.atleast_2d(np.asarray(self.jacobiaani(x), dtype=float))
    if tulos.shape != (self.dim, self.dim):
      raise ValueError(f'Jacobiaani palautti muodon {tulos.shape}')
    return tulos
    # def _jacobiaanin_arvo

  def derivaatta(self, x: np.ndarray) -> np.ndarray:
    ''' F'(x) tiheänä n×n-matriisina. '''
    if self.jacobiaani is None:
      raise self.JacobiaaniPuuttuu('Tehtävälle ei ole annettu Jacobiaania.')
    return self._jacobiaanin_arvo(x)
    # def derivaatta

  def askel(self, x: np.ndarray) -> np.ndarray:
    ''' T(x) = x - B·F(x): yksi F:n arvo ja yksi matriisi-vektoritulo. '''
    return x - self.B @ self.arvo(x)

  def etaisyys(self, x: np.ndarray) -> float:
    ''' ||x - x0||. '''
    return self.normi.vektori(x - self.x0)

  def eta(self) -> float:
    ''' η = ||B·F(x0)|| (tarkka arvo). '''
    return self.normi.vektori(self.B @ self.arvo(self.x0))

  def nu(self) -> float:
    ''' ν = ||B·F'(x0) - I||. '''
    return self.normi.matriisi(
      self.B @ self.derivaatta(self.x0) - np.eye(self.dim)
    )
    # def nu

  # class Tehtava


@dataclass(frozen=True, kw_only=True)
class Iteraatiojalki:
  '''
  Iteraation jälki: iteraatit x_0 ... x_K, askelpituudet
  ||x_{k+1} - x_k|| (K kpl), jäännökset ||F(x_k)|| (K + 1 kpl).

  Sertifikaatin kanssa ajettaessa lisäksi skalaariaskeleet
  v_{k+1} - v_k, marginaalit (v_{k+1} - v_k) - ||x_{k+1} - x_k||
  sekä a priori -virherajat ν* - v_k (K + 1 kpl).
  '''

  iteraatit: tuple[np.ndarray, ...]
  askelpituudet: tuple[float, ...]
  jaannokset: tuple[float, ...]
  skalaariaskeleet: Valinnainen[tuple[float, ...]] = ei_syotetty
  marginaalit: Valinnainen[tuple[float, ...]] = ei_syotetty
  virherajat: Valinnainen[tuple[float, ...]] = ei_syotetty
  syy: Pysahtyminen
  normi: Normi = Normi.MAKSIMI

  @property
  def askelia(self) -> int:
    return len(self.askelpituudet)

  @property
  def ratkaisu(self) -> np.ndarray:
    return self.iteraatit[-1]

  @property
  def suppeni(self) -> bool:
    return self.syy in (Pysahtyminen.ASKEL, Pysahtyminen.JAANNOS)

  def rivit(self):
    '''
    Tuota taulukkorivit (k, askel, jäännös, skalaariaskel,
    marginaali, virheraja); puuttuvat arvot ovat `None`.
    '''
    def _alkio(jono, k):
      if jono is ei_syotetty or k >= len(jono):
        return None
      return jono[k]
    for k in range(len(self.iteraatit)):
      yield (
        k,
        _alkio(self.askelpituudet, k),
        _alkio(self.jaannokset, k),
        _alkio(self.skalaariaskeleet, k),
        _alkio(self.marginaalit, k),
        _alkio(self.virherajat, k),
      )
    # def rivit

  # class Iteraatiojalki


class IteraationEdistyminen(Protocol):

  def __call__(self, *, k: int, askel: float, jaannos: float) -> None:
    ...

  # class IteraationEdistyminen


class OletusEdistyminen(IteraationEdistyminen, Rutiini):

  @staticmethod
  def __call__(self, *, k: int, askel: float, jaannos: float) -> None:
    # pylint: disable=bad-staticmethod-argument
    if self.tulosta_edistyminen and k % self.raportointivali == 0:
      logger.info(
        'Iteraatio %d: askel %.3e, jäännös %.3e', k, askel, jaannos
      )
    # def __call__

  # class OletusEdistyminen


@dataclass(frozen=True, kw_only=True)
class MajorointiRaportti(Sanoma):
  '''
  Majorointiehtojen tarkistus iteraatiojäljelle:
  ||x_{k+1} - x_k|| <= v_{k+1} - v_k ja (suppenemisen jälkeen)
  ||x_K - x_k|| <= ν* - v_k.
  '''
  ulkoiset_nimet = {
    'lapaisty': 'passed',
    'pahin_marginaali': 'worst_slack',
    'askelmarginaalit': 'step_slacks',
    'hantamarginaalit': 'tail_slacks',
    'toleranssi': 'slack_tol',
  }

  lapaisty: bool
  pahin_marginaali: float
  askelmarginaalit: tuple[float, ...]
  hantamarginaalit: tuple[float, ...] | Vakio = puuttuu
  toleranssi: float

  # class MajorointiRaportti


@dataclass(frozen=True, kw_only=True)
class YksikasitteisyysRaportti(Sanoma):
  ''' Eri lähtöpisteistä saatujen raja-arvojen vertailu. '''
  ulkoiset_nimet = {
    'lahtopisteet': 'starts',
    'rajat': 'limits',
    'virheet': 'errors',
    'suurin_etaisyys': 'max_pairwise_distance',
    'lapaisty': 'passed',
    'toleranssi': 'tol',
  }

  lahtopisteet: tuple
  rajat: tuple
  virheet: tuple
  suurin_etaisyys: float | Vakio
  lapaisty: bool
  toleranssi: float

  # class YksikasitteisyysRaportti


@dataclass(frozen=True, kw_only=True)
class LipschitzRaportti(Sanoma):
  '''
  Suurin havaittu suhde ||T(x) - T(y)|| / ||x - y|| kullakin
  säteellä v verrattuna mitan arvoon ω_B(v).
  '''
  ulkoiset_nimet = {
    'sateet': 'radii',
    'suhteet': 'ratios',
    'rajat': 'bounds',
    'lapaisty': 'passed',
  }

  sateet: tuple[float, ...]
  suhteet: tuple[float, ...]
  rajat: tuple[float, ...]
  lapaisty: bool

  # class LipschitzRaportti


@dataclass(kw_only=True)
class Ratkaisija:
  '''
  Kiinteän kulmakertoimen iteraation ajaja.

  Pysähtymisehdot: askel <= `tol_askel`, jäännös <= `tol_jaannos`
  tai `max_iter` askelta.

  >>> ratkaisija = Ratkaisija(tol_askel=1e-14)
  >>> x, jalki = ratkaisija.ratkaise(tehtava, sertifikaatti)
  '''

  tol_askel: float = 1e-12
  tol_jaannos: float = 1e-12
  max_iter: int = 10000

  # Kutsutaan muodossa `mittaa_laskenta(funktio, args, kesto)`.
  mittaa_laskenta: Optional[Callable] = None

  # Kirjataanko iteraation edistyminen (INFO) joka
  # `raportointivali`:nnellä askeleella? Ei vaikutusta, mikäli
  # `iteraation_edistyminen` on asetettu käsin.
  tulosta_edistyminen: bool = False
  raportointivali: int = 100
  iteraation_edistyminen: IteraationEdistyminen = field(
    default=OletusEdistyminen(),
    repr=False,
  )

  class VirheellisetAsetukset(VirheellinenSyote):
    pass

  def __post_init__(self):
    if not (self.tol_askel > 0 and self.tol_jaannos > 0):
      raise self.VirheellisetAsetukset('Toleranssien on oltava positiivisia.')
    if self.max_iter < 1 or self.raportointivali < 1:
      raise self.VirheellisetAsetukset(
        f'max_iter = {self.max_iter}, raportointivali = {self.raportointivali}'
      )
    # def __post_init__

  @mittaa
  def ratkaise(
    self,
    tehtava: Tehtava,
    sertifikaatti: Valinnainen[Sertifikaatti] = ei_syotetty,
    alku: Valinnainen[np.ndarray] = ei_syotetty,
  ) -> tuple[np.ndarray, Iteraatiojalki]:
    '''
    Iteroi x_{k+1} = x_k - B·F(x_k), kunnes askel tai jäännös
    alittaa toleranssin tai askelia on otettu `max_iter`.

    Sertifikaatin kanssa kunkin askeleen rinnalle kirjataan
    skalaariaskel, marginaali ja virheraja, ja iteraatti saa
    poiketa lähtöpisteestä x0 enintään säteen min(R, ν*) verran.
    Muuten säde on R. Vaihtoehtoinen lähtöpiste `alku` korvaa x0:n
    iteraation alkuna, mutta etäisyydet mitataan x0:sta.
    '''
    normi = tehtava.normi
    sade = tehtava.R
    termit = None
    if sertifikaatti is not ei_syotetty:
      if not sertifikaatti.sertifioitu or sertifikaatti.malli is ei_syotetty:
        raise Sertifikaatti.Puuttuu('Sertifikaatti ei ole voimassa.')
      sade = min(sade, sertifikaatti.nu_tahti)
      termit = sertifikaatti.malli.skalaaritermit()
      v = next(termit)
    raja = sade + PALLOTOLERANSSI * max(1.0, sade)

    x = tehtava.x0.copy() if alku is ei_syotetty \
    else np.atleast_1d(np.asarray(alku, dtype=float))
    fx = tehtava.arvo(x)
    iteraatit, askeleet, jaannokset = [x], [], [normi.vektori(fx)]
    skalaariaskeleet, marginaalit, virherajat = [], [], []
    if termit is not None:
      virherajat.append(sertifikaatti.nu_tahti - v)

    for k in range(self.max_iter):
      if jaannokset[-1] <= self.tol_jaannos:
        syy = Pysahtyminen.JAANNOS
        break
      uusi = x - tehtava.B @ fx
      if tehtava.etaisyys(uusi) > raja:
        logger.warning(
          'Iteraatti %d poistui pallosta: ||x - x0|| = %r > %r',
          k + 1, tehtava.etaisyys(uusi), sade,
        )
        syy = Pysahtyminen.POISTUI
        break
      askel = normi.vektori(uusi - x)
      x, fx = uusi, tehtava.arvo(uusi)
      iteraatit.append(x)
      askeleet.append(askel)
      jaannokset.append(normi.vektori(fx))
      if termit is not None:
        v, v_edellinen = next(termit), v
        skalaariaskeleet.append(v - v_edellinen)
        marginaalit.append(v - v_edellinen - askel)
        virherajat.append(sertifikaatti.nu_tahti - v)
      self.iteraation_edistyminen(k=k + 1, askel=askel, jaannos=jaannokset[-1])
      if askel <= self.tol_askel:
        syy = Pysahtyminen.ASKEL
        break
      # for k in range
    else:
      syy = (
        Pysahtyminen.JAANNOS if jaannokset[-1] <= self.tol_jaannos
        else Pysahtyminen.MAKSIMI
      )

    logger.debug(
      'Iteraatio päättyi: %s, %d askelta, jäännös %r',
      syy, len(askeleet), jaannokset[-1],
    )
    jalki = Iteraatiojalki(
      iteraatit=tuple(iteraatit),
      askelpituudet=tuple(askeleet),
      jaannokset=tuple(jaannokset),
      syy=syy,
      normi=normi,
      **({
        'skalaariaskeleet': tuple(skalaariaskeleet),
        'marginaalit': tuple(marginaalit),
        'virherajat': tuple(virherajat),
      } if termit is not None else {}),
    )
    return x, jalki
    # def ratkaise

  def yksikasitteisyyskoe(
    self,
    tehtava: Tehtava,
    sertifikaatti: Sertifikaatti,
    lukumaara: int = 100,
    siemen: int = OLETUSSIEMEN,
    tol: float = 1e-8,
  ) -> YksikasitteisyysRaportti:
    '''
    Aja iteraatio `lukumaara` lähtöpisteestä yksikäsitteisyyspallon
    B(x0, λ*·(1 - 1e-6)) sisältä ja vertaa raja-arvoja.

    Ensimmäinen lähtöpiste on x0. Lähtökohtaiset virheet kirjataan
    raporttiin; koe läpäistään, kun kaikki ajot suppenivat ja
    raja-arvojen suurin keskinäinen etäisyys on enintään `tol`.
    '''
    if not sertifikaatti.sertifioitu:
      raise Sertifikaatti.Puuttuu('Sertifikaatti ei ole voimassa.')
    if lukumaara < 1:
      raise self.VirheellisetAsetukset(f'lukumaara = {lukumaara}')
    sade = min(sertifikaatti.lambda_tahti, tehtava.R)
    lahtopisteet = [tehtava.x0] + tehtava.normi.pallon_sisalta(
      tehtava.x0,
      sade * (1.0 - SISAMARGINAALI),
      lukumaara - 1,
      np.random.default_rng(siemen),
    )
    rajat, virheet = [], []
    for lahto in lahtopisteet:
      try:
        x, jalki = self.ratkaise(tehtava, alku=lahto)
      except Poikkeus as exc:
        rajat.append(puuttuu)
        virheet.append(str(exc))
        continue
      rajat.append(x)
      virheet.append(None if jalki.suppeni else str(jalki.syy))
      # for lahto in lahtopisteet

    suppeneet = [x for x in rajat if x is not puuttuu]
    suurin = max(
      (
        tehtava.normi.vektori(x - y)
        for x, y in itertools.combinations(suppeneet, 2)
      ),
      default=0.0,
    ) if suppeneet else puuttuu
    lapaisty = all(virhe is None for virhe in virheet) \
    and suurin is not puuttuu and suurin <= tol
    logger.info(
      'Yksikäsitteisyyskoe: %d lähtöä, suurin etäisyys %r', lukumaara, suurin
    )
    return YksikasitteisyysRaportti(
      lahtopisteet=tuple(lahtopisteet),
      rajat=tuple(rajat),
      virheet=tuple(virheet),
      suurin_etaisyys=suurin,
      lapaisty=lapaisty,
      toleranssi=tol,
    )
    # def yksikasitteisyyskoe

  # class Ratkaisija


def tarkista_majorointi(
  jalki: Iteraatiojalki,
  sertifikaatti: Sertifikaatti,
  toleranssi: float = 1e-9,
) -> MajorointiRaportti:
  '''
  Tarkista askelrajat ||x_{k+1} - x_k|| <= v_{k+1} - v_k + tol ja,
  mikäli iteraatio suppeni, häntärajat ||x_K - x_k|| <= ν* - v_k + tol.

  Epäonnistuminen raportoidaan, ei nosteta poikkeuksena.
  '''
  if not sertifikaatti.sertifioitu:
    raise Sertifikaatti.Puuttuu('Majorointi vaatii sertifikaatin.')
  if not jalki.askelia:
    raise VirheellinenSyote('Iteraatiojäljessä ei ole yhtään askelta.')
  v = sertifikaatti.skalaaritermit(jalki.askelia + 1)
  askelmarginaalit = tuple(
    (v[k + 1] - v[k]) - askel
    for k, askel in enumerate(jalki.askelpituudet)
  )
  marginaalit = list(askelmarginaalit)
  hantamarginaalit = puuttuu
  if jalki.suppeni:
    normi = jalki.normi.vektori
    hantamarginaalit = tuple(
      (sertifikaatti.nu_tahti - v[k]) - normi(jalki.ratkaisu - x)
      for k, x in enumerate(jalki.iteraatit)
    )
    marginaalit += hantamarginaalit
  pahin = min(marginaalit)
  logger.debug('Majorointi: pahin marginaali %r', pahin)
  return MajorointiRaportti(
    lapaisty=pahin >= -toleranssi,
    pahin_marginaali=pahin,
    askelmarginaalit=askelmarginaalit,
    hantamarginaalit=hantamarginaalit,
    toleranssi=toleranssi,
  )
  # def tarkista_majorointi


def oletussateet(R: float, lukumaara: int = 32) -> list[float]:
  ''' Tasavälinen säteistö ]0, R]. '''
  return [R * (i + 1) / lukumaara for i in range(lukumaara)]


def arvioi_omega(
  tehtava: Tehtava,
  tapa: Tapa = Tapa.SUORA,
  sateet: Valinnainen[Sequence[float]] = ei_syotetty,
  naytteita: int = 64,
  siemen: int = OLETUSSIEMEN,
) -> TaulukoituMitta:
  '''
  Arvioi jatkuvuusmitta näytteistämällä palloja ||x - x0|| = v.

  Kullakin säteellä lasketaan suurin poikkeama ||B·F'(x) - I||
  (suora) tai ||B·(F'(x) - F'(x0))|| (keskitetty) ja pakotetaan
  monotonisuus juoksevalla maksimilla. Säteellä 0 arvo on ν (suora)
  tai 0 (keskitetty).

  Huomaa, että näytteistetty arvio on todellisen mitan alaraja.
  Kakkosnormilla suuriulotteisen pallon satunnaiset suunnat jäävät
  helposti kauas pahimmasta suunnasta, jolloin arviolla laskettu
  sertifikaatti voi olla liian optimistinen; tarkista tulos tällöin
  `tarkista_majorointi`-funktiolla.
  '''
  sateet = list(sateet or oletussateet(tehtava.R))
  if not sateet or sateet[0] <= 0 or sateet[-1] > tehtava.R:
    raise Mitta.SadeAlueenUlkopuolella(
      f'Säteiden on oltava välillä ]0, R = {tehtava.R!r}]: {sateet!r}'
    )
  if any(b <= a for a, b in itertools.pairwise(sateet)):
    raise Mitta.VirheellinenMitta('Säteet eivät ole kasvavia.')
  if naytteita < 1:
    raise VirheellinenSyote(f'naytteita = {naytteita}')

  normi, n = tehtava.normi, tehtava.dim
  rng = np.random.default_rng(siemen)
  BJ0 = tehtava.B @ tehtava.derivaatta(tehtava.x0)
  vertailu = np.eye(n) if tapa is Tapa.SUORA else BJ0

  def poikkeama(x):
    return normi.matriisi(tehtava.B @ tehtava.derivaatta(x) - vertailu)

  huippu = poikkeama(tehtava.x0) if tapa is Tapa.SUORA else 0.0
  if tapa is Tapa.SUORA and huippu >= 1:
    raise MajoranttiMalli.EiSupistava(f'ν = {huippu!r} >= 1')
  solmut = [(0.0, huippu)]
  for v in sateet:
    huippu = max(huippu, max(
      poikkeama(tehtava.x0 + v * suunta)
      for suunta in normi.suunnat(n, naytteita, rng)
    ))
    solmut.append((v, huippu))
  logger.debug('Arvioitu mitta (%s): %r', tapa, solmut)
  return TaulukoituMitta(solmut=tuple(solmut))
  # def arvioi_omega


def sertifioi_arvioiduilla(
  tehtava: Tehtava,
  sateet: Valinnainen[Sequence[float]] = ei_syotetty,
  naytteita: int = 64,
  siemen: int = OLETUSSIEMEN,
  tol: float = JUURITOLERANSSI,
) -> Sertifikaatti:
  '''
  Sertifioi tehtävä arvioidulla mitalla ω_B(v) = ν + ω0(v), missä
  ω0 on keskitetty arvio ja ν = ||B·F'(x0) - I|| lasketaan tarkasti.
  '''
  keskitetty = arvioi_omega(
    tehtava, Tapa.KESKITETTY, sateet, naytteita, siemen
  )
  malli = MajoranttiMalli(
    eta=tehtava.eta(),
    R=tehtava.R,
    omega=yhdista_mitat(tehtava.nu(), keskitetty),
  )
  return sertifioi(malli, tol)
  # def sertifioi_arvioiduilla


def tarkista_lipschitz(
  tehtava: Tehtava,
  omega: Mitta,
  sateet: Valinnainen[Sequence[float]] = ei_syotetty,
  pareja: int = 32,
  siemen: int = OLETUSSIEMEN,
  tol: float = 1e-9,
) -> LipschitzRaportti:
  '''
  Ristiintarkista mitta Lipschitz-ehdolla: pisteille x, y pallossa
  B̄(x0, v) pätee ||T(x) - T(y)|| <= ω_B(v)·||x - y||.
  '''
  sateet = list(sateet or oletussateet(tehtava.R, 8))
  normi = tehtava.normi
  rng = np.random.default_rng(siemen)
  suhteet, rajat = [], []
  for v in sateet:
    pisteet = normi.pallon_sisalta(tehtava.x0, v, 2 * pareja, rng)
    suurin = 0.0
    for x, y in zip(pisteet[::2], pisteet[1::2]):
      if (etaisyys := normi.vektori(x - y)) > 0:
        suurin = max(
          suurin,
          normi.vektori(tehtava.askel(x) - tehtava.askel(y)) / etaisyys,
        )
    suhteet.append(suurin)
    rajat.append(omega.arvo(v))
  return LipschitzRaportti(
    sateet=tuple(sateet),
    suhteet=tuple(suhteet),
    rajat=tuple(rajat),
    lapaisty=all(s <= r + tol for s, r in zip(suhteet, rajat)),
  )
  # def tarkista_lipschitz
