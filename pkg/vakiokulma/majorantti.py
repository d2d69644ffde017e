'''
Jatkuvuusmitat ω_B, skalaarimajorantti φ sekä sen kiintopiste-
yhtälön v = φ(v) juuret ja majoroiva skalaarijono.

Merkinnät:
  φ(v) = η + ∫_0^v ω_B(l) dl,   g(v) = φ(v) - v,   ν = ω_B(0).
'''

from dataclasses import dataclass, field
from functools import cached_property
import itertools
import logging
import math
from typing import Callable, Iterator

import numpy as np

from .sanoma import Valintakentta
from .tyokalut import (
  LaskentaVirhe,
  Vakio,
  VirheellinenSyote,
  puuttuu,
  rajaton,
  reunalla,
)


logger = logging.getLogger(__name__)


# Juurten oletustoleranssi (puolitusvälin leveys, skaalattuna max(1, η):lla).
JUURITOLERANSSI = 1e-12

# Puolitusaskelten yläraja.
PUOLITUKSET = 200

# Juuret yhdistetään (sivuamistapaus), kun niiden etäisyys
# on alle tämän kertoimen ja toleranssin tulon.
SIVUAMISKERROIN = 10.0


class Mitta:
  '''
  Ei-vähenevä, ei-negatiivinen jatkuvuusmitta ω_B(v), v >= 0.

  Aliluokat toteuttavat arvon, integraalin 0..v sekä pienimmän
  säteen, jolla mitta saavuttaa annetun tason.
  '''

  class SadeAlueenUlkopuolella(VirheellinenSyote):
    ''' Säde on negatiivinen tai mitan määrittelyalueen ulkopuolella. '''

  class VirheellinenMitta(VirheellinenSyote):
    ''' Mitan parametrit tai solmut ovat virheelliset. '''

  @property
  def kattavuus(self) -> float:
    ''' Suurin säde, jolla mitta on määritelty. '''
    return math.inf

  @property
  def nu(self) -> float:
    ''' ν = ω_B(0). '''
    return self.arvo(0.0)

  def _tarkista_sade(self, v: float):
    if not 0.0 <= v <= self.kattavuus:
      raise self.SadeAlueenUlkopuolella(
        f'Säde {v!r} ei ole välillä [0, {self.kattavuus!r}]'
      )
    # def _tarkista_sade

  def arvo(self, v: float) -> float:
    raise NotImplementedError

  def integraali(self, v: float) -> float:
    ''' ∫_0^v ω_B(l) dl. '''
    raise NotImplementedError

  def ylitys(self, taso: float = 1.0) -> float | Vakio:
    '''
    Pienin säde v, jolla ω_B(v) >= taso; `rajaton`, mikäli
    tasoa ei saavuteta määrittelyalueella.
    '''
    raise NotImplementedError

  # class Mitta


@dataclass(frozen=True, kw_only=True)
class HolderMitta(Mitta):
  ''' ω_B(v) = ν + l0·v^α. '''

  l0: float
  alpha: float = 1.0
  nu: float = 0.0

  def __post_init__(self):
    if not (math.isfinite(self.l0) and self.l0 >= 0):
      raise self.VirheellinenMitta(f'l0 = {self.l0!r} < 0')
    if not 0.0 < self.alpha <= 1.0:
      raise self.VirheellinenMitta(f'α = {self.alpha!r} ei ole välillä ]0, 1]')
    if not (math.isfinite(self.nu) and self.nu >= 0):
      raise self.VirheellinenMitta(f'ν = {self.nu!r} < 0')
    # def __post_init__

  def arvo(self, v: float) -> float:
    self._tarkista_sade(v)
    return self.nu + self.l0 * v ** self.alpha

  def integraali(self, v: float) -> float:
    self._tarkista_sade(v)
    return (
      self.nu * v
      + self.l0 * v ** (1.0 + self.alpha) / (1.0 + self.alpha)
    )
    # def integraali

  def ylitys(self, taso: float = 1.0) -> float | Vakio:
    if self.nu >= taso:
      return 0.0
    elif self.l0 == 0:
      return rajaton
    return ((taso - self.nu) / self.l0) ** (1.0 / self.alpha)
    # def ylitys

  # class HolderMitta


@dataclass(frozen=True, kw_only=True)
class TaulukoituMitta(Mitta):
  '''
  Paloittain lineaarinen mitta solmuista (säde, arvo).

  Ensimmäisen solmun säde on 0; säteet ovat aidosti kasvavia ja
  arvot ei-väheneviä. Mittaa ei jatketa viimeisen solmun yli.
  '''

  solmut: tuple[tuple[float, float], ...]

  def __post_init__(self):
    object.__setattr__(
      self, 'solmut', tuple((float(r), float(y)) for r, y in self.solmut)
    )
    if len(self.solmut) < 2:
      raise self.VirheellinenMitta('Mitta vaatii vähintään kaksi solmua.')
    sateet, arvot = self._sateet, self._arvot
    if not (np.all(np.isfinite(sateet)) and np.all(np.isfinite(arvot))):
      raise self.VirheellinenMitta('Solmuissa on epä-äärellisiä arvoja.')
    if sateet[0] != 0.0:
      raise self.VirheellinenMitta(
        f'Ensimmäisen solmun säde on {sateet[0]!r}, ei 0.'
      )
    if np.any(np.diff(sateet) <= 0):
      raise self.VirheellinenMitta('Solmujen säteet eivät ole kasvavia.')
    if np.any(arvot < 0):
      raise self.VirheellinenMitta('Mitta saa negatiivisia arvoja.')
    if np.any(np.diff(arvot) < 0):
      raise self.VirheellinenMitta('Mitta ei ole ei-vähenevä.')
    # def __post_init__

  @cached_property
  def _sateet(self) -> np.ndarray:
    return np.array([r for r, _ in self.solmut])

  @cached_property
  def _arvot(self) -> np.ndarray:
    return np.array([y for _, y in self.solmut])

  @cached_property
  def _kertyma(self) -> np.ndarray:
    ''' Integraali 0..r_i kunkin solmun kohdalla (puolisuunnikkaat). '''
    return np.concatenate((
      [0.0],
      np.cumsum(
        np.diff(self._sateet) * (self._arvot[1:] + self._arvot[:-1]) / 2
      ),
    ))
    # def _kertyma

  @property
  def kattavuus(self) -> float:
    return float(self._sateet[-1])

  def arvo(self, v: float) -> float:
    self._tarkista_sade(v)
    return float(np.interp(v, self._sateet, self._arvot))

  def integraali(self, v: float) -> float:
    self._tarkista_sade(v)
    i = int(np.clip(
      np.searchsorted(self._sateet, v, side='right') - 1,
      0, len(self._sateet) - 2,
    ))
    return float(
      self._kertyma[i]
      + (v - self._sateet[i]) * (self._arvot[i] + self.arvo(v)) / 2
    )
    # def integraali

  def ylitys(self, taso: float = 1.0) -> float | Vakio:
    arvot, sateet = self._arvot, self._sateet
    if arvot[-1] < taso:
      return rajaton
    j = int(np.argmax(arvot >= taso))
    if j == 0:
      return 0.0
    return float(
      sateet[j - 1]
      + (taso - arvot[j - 1]) / (arvot[j] - arvot[j - 1])
      * (sateet[j] - sateet[j - 1])
    )
    # def ylitys

  # class TaulukoituMitta


def yhdista_mitat(nu: float, omega0: Mitta) -> Mitta:
  '''
  Muodosta mitta ω_B(v) = ν + ω0(v) keskitetystä mitasta
  ω0 (ω0(0) = 0) ja lähtöpisteen arvosta ν = ||B·F'(x0) - I||.
  '''
  if isinstance(omega0, HolderMitta):
    return HolderMitta(l0=omega0.l0, alpha=omega0.alpha, nu=omega0.nu + nu)
  elif isinstance(omega0, TaulukoituMitta):
    return TaulukoituMitta(
      solmut=tuple((r, y + nu) for r, y in omega0.solmut)
    )
  raise TypeError(f'Tuntematon mitta: {omega0!r}')
  # def yhdista_mitat


class Tapaus(Valintakentta):
  '''
  Yksikäsitteisyyssäteen λ* luokitus: B1 (suljettu pallo) tai
  B2 (avoin pallo, φ(λ*) = λ*).
  '''
  B1 = 'B1'
  B2 = 'B2'


def _puolita(
  h: Callable[[float], float],
  ala: float,
  yla: float,
  leveys: float,
  *,
  positiivinen_ala: bool,
) -> tuple[float, float]:
  '''
  Puolita väliä [ala, yla], jonka toisessa päässä h > 0 ja toisessa
  h <= 0. Palauttaa lopullisen välin.
  '''
  for _ in range(PUOLITUKSET):
    if yla - ala <= leveys:
      break
    keski = 0.5 * (ala + yla)
    if not ala < keski < yla:
      break
    if (h(keski) > 0) == positiivinen_ala:
      ala = keski
    else:
      yla = keski
  return ala, yla
  # def _puolita


def kuperan_juuret(
  h: Callable[[float], float],
  minimikohta: float,
  R: float,
  leveys: float,
) -> tuple[float | Vakio, float | Vakio]:
  '''
  Kuperan funktion h (h(0) > 0) pienin ja suurin nollakohta välillä
  [0, R], kun h on ei-kasvava välillä [0, minimikohta] ja ei-vähenevä
  välillä [minimikohta, R].

  Palauttaa (`puuttuu`, `puuttuu`), mikäli h(minimikohta) > 0, ja
  suurimpana juurena `reunalla`, mikäli h(R) < 0.
  '''
  if h(minimikohta) > 0:
    return puuttuu, puuttuu
  pienin = _puolita(h, 0.0, minimikohta, leveys, positiivinen_ala=True)[1]
  if (h_reuna := h(R)) < 0:
    return pienin, reunalla
  elif h_reuna == 0:
    suurin = R
  else:
    suurin = _puolita(h, minimikohta, R, leveys, positiivinen_ala=False)[0]
  if suurin - pienin < SIVUAMISKERROIN * leveys:
    suurin = pienin
  return pienin, max(suurin, pienin)
  # def kuperan_juuret


@dataclass(frozen=True, kw_only=True)
class SkalaariJuuret:
  ''' Majorantin skalaariset tunnusluvut ν*, ν**, γ*, λ* ja tapaus. '''

  nu_tahti: float | Vakio
  nu_tahti_tahti: float | Vakio
  gamma_tahti: float
  lambda_tahti: float | Vakio
  tapaus: Tapaus | Vakio

  # class SkalaariJuuret


@dataclass(frozen=True, kw_only=True)
class MajoranttiMalli:
  '''
  Skalaarimajorantti (η, R, ω_B):

    φ(v) = η + ∫_0^v ω_B(l) dl,   g(v) = φ(v) - v,   v ∈ [0, R].
  '''

  eta: float
  R: float
  omega: Mitta

  class VirheellinenMalli(VirheellinenSyote):
    pass

  class EiSupistava(VirheellinenSyote):
    ''' ν = ω_B(0) >= 1. '''

  class EiSertifioitu(VirheellinenSyote):
    ''' Yhtälöllä v = φ(v) ei ole ratkaisua välillä [0, R]. '''

  @dataclass(kw_only=True)
  class IteraatiotLoppuivat(LaskentaVirhe):
    ''' Skalaarijono ei pysähtynyt sallitussa askelmäärässä. '''
    jono: list = field(default_factory=list)

    def __post_init__(self):
      super().__init__(
        f'Skalaarijono ei supennut {len(self.jono) - 1} askeleessa.'
      )
      # def __post_init__

    # class IteraatiotLoppuivat

  def __post_init__(self):
    if not (math.isfinite(self.eta) and self.eta > 0):
      raise self.VirheellinenMalli(f'η = {self.eta!r}; vaaditaan η > 0.')
    if not (math.isfinite(self.R) and self.R > 0):
      raise self.VirheellinenMalli(f'R = {self.R!r}; vaaditaan R > 0.')
    if self.omega.kattavuus < self.R:
      raise self.VirheellinenMalli(
        f'Mitta on määritelty vain säteeseen {self.omega.kattavuus!r} < R.'
      )
    # def __post_init__

  @property
  def nu(self) -> float:
    return self.omega.nu

  def _tarkista_sade(self, v: float):
    if not 0.0 <= v <= self.R:
      raise Mitta.SadeAlueenUlkopuolella(
        f'Säde {v!r} ei ole välillä [0, R = {self.R!r}]'
      )
    # def _tarkista_sade

  def omega_arvo(self, v: float) -> float:
    ''' ω_B(v), 0 <= v <= R. '''
    self._tarkista_sade(v)
    return self.omega.arvo(v)

  def phi(self, v: float) -> float:
    ''' φ(v) = η + ∫_0^v ω_B. '''
    self._tarkista_sade(v)
    return self.eta + self.omega.integraali(v)

  def g(self, v: float) -> float:
    ''' g(v) = φ(v) - v. '''
    return self.phi(v) - v

  def _tarkista_nu(self):
    if (nu := self.nu) >= 1:
      raise self.EiSupistava(f'ν = ω_B(0) = {nu!r} >= 1')
    # def _tarkista_nu

  def gamma_tahti(self) -> float:
    '''
    γ* = sup {γ ∈ ]0, R] | ω_B(γ) < 1}: pienin säde, jolla
    ω_B saavuttaa arvon 1, rajattuna säteeseen R.
    '''
    self._tarkista_nu()
    if (ylitys := self.omega.ylitys(1.0)) is rajaton:
      return self.R
    return min(self.R, ylitys)
    # def gamma_tahti

  def ehto_a(self) -> bool:
    ''' Ehto A: φ(γ*) <= γ*. '''
    return self.g(self.gamma_tahti()) <= 0

  def _leveys(self, tol: float) -> float:
    return tol * max(1.0, self.eta)

  def _juuripari(self, tol: float) -> tuple[float | Vakio, float | Vakio]:
    self._tarkista_nu()
    return kuperan_juuret(
      self.g, self.gamma_tahti(), self.R, self._leveys(tol)
    )
    # def _juuripari

  def pienin_juuri(self, tol: float = JUURITOLERANSSI) -> float | Vakio:
    '''
    Yhtälön v = φ(v) pienin ratkaisu ν* välillä [0, R] tai
    `puuttuu`, mikäli ehto A ei ole voimassa.
    '''
    return self._juuripari(tol)[0]

  def suurin_juuri(self, tol: float = JUURITOLERANSSI) -> float | Vakio:
    '''
    Suurin ratkaisu ν** välillä [ν*, R]; `reunalla`, mikäli
    g(R) < 0 (juuri on säteen R ulkopuolella).
    '''
    pienin, suurin = self._juuripari(tol)
    if pienin is puuttuu:
      raise self.EiSertifioitu('Pienin juuri puuttuu.')
    return suurin
    # def suurin_juuri

  def lambda_tahti(
    self, tol: float = JUURITOLERANSSI
  ) -> tuple[float, Tapaus]:
    '''
    Yksikäsitteisyyssäde λ* ja tapaus B1/B2.

    Kuperuuden vuoksi g on välillä ]ν*, ν**[ joko aidosti negatiivinen
    tai identtisesti nolla, joten joukon Λ tyhjyys ratkeaa välin
    keskipisteessä.
    '''
    pienin, suurin = self._juuripari(tol)
    if pienin is puuttuu:
      raise self.EiSertifioitu('Pienin juuri puuttuu.')
    elif suurin is reunalla:
      return self.R, Tapaus.B1
    elif suurin > pienin and self.g(0.5 * (pienin + suurin)) < 0:
      return suurin, Tapaus.B2
    return pienin, Tapaus.B1
    # def lambda_tahti

  def juuret(self, tol: float = JUURITOLERANSSI) -> SkalaariJuuret:
    ''' Kaikki skalaariset tunnusluvut kerralla. '''
    gamma = self.gamma_tahti()
    pienin, suurin = self._juuripari(tol)
    if pienin is puuttuu:
      return SkalaariJuuret(
        nu_tahti=puuttuu,
        nu_tahti_tahti=puuttuu,
        gamma_tahti=gamma,
        lambda_tahti=puuttuu,
        tapaus=puuttuu,
      )
    lambda_, tapaus = self.lambda_tahti(tol)
    logger.debug(
      'ν* = %r, ν** = %r, γ* = %r, λ* = %r (%s)',
      pienin, suurin, gamma, lambda_, tapaus,
    )
    return SkalaariJuuret(
      nu_tahti=pienin,
      nu_tahti_tahti=suurin,
      gamma_tahti=gamma,
      lambda_tahti=lambda_,
      tapaus=tapaus,
    )
    # def juuret

  def skalaaritermit(self) -> Iterator[float]:
    ''' Päättymätön jono v_0 = 0, v_{k+1} = φ(v_k). '''
    v = 0.0
    while True:
      yield v
      v = min(self.phi(v), self.R)
    # def skalaaritermit

  def skalaarijono(
    self,
    tol: float = JUURITOLERANSSI,
    max_iter: int = 10000,
  ) -> list[float]:
    '''
    Majoroiva jono v_0 = 0, v_1, ..., katkaistuna kun
    v_{k+1} - v_k <= tol.
    '''
    if self.pienin_juuri(tol) is puuttuu:
      raise self.EiSertifioitu(
        'Yhtälöllä v = φ(v) ei ole ratkaisua välillä [0, R].'
      )
    termit = self.skalaaritermit()
    jono = [next(termit)]
    for v in itertools.islice(termit, max_iter):
      jono.append(v)
      if v - jono[-2] <= tol:
        return jono
    raise self.IteraatiotLoppuivat(jono=jono)
    # def skalaarijono

  def on_kupera(self, naytteita: int = 65) -> bool:
    '''
    Tarkista näytteistä, että φ on ei-vähenevä ja kupera välillä [0, R].
    '''
    v = np.linspace(0.0, self.R, naytteita)
    arvot = np.array([self.phi(x) for x in v])
    kasvava = bool(np.all(np.diff(arvot) >= -1e-12 * max(1.0, arvot[-1])))
    toinen_erotus = arvot[2:] - 2 * arvot[1:-1] + arvot[:-2]
    return kasvava and bool(
      np.all(toinen_erotus >= -1e-12 * max(1.0, arvot[-1]))
    )
    # def on_kupera

  # class MajoranttiMalli