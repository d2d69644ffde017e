'''
Kiinteän kulmakertoimen iteraation suppenemis- ja yksikäsitteisyys-
sertifikaatti sekä Hölder-jatkuvan derivaatan suljetut muodot.
'''

from dataclasses import dataclass, field
import itertools
import logging
import math

from .majorantti import (
  JUURITOLERANSSI,
  SIVUAMISKERROIN,
  HolderMitta,
  MajoranttiMalli,
  Tapaus,
)
from .sanoma import Sanoma, Valintakentta
from .tyokalut import (
  Valinnainen,
  Vakio,
  VirheellinenSyote,
  ei_syotetty,
  puuttuu,
  rajaton,
  reunalla,
)


logger = logging.getLogger(__name__)


# Sertifikaattiin tallennettavien skalaarijonon termien määrä.
ESIKATSELU = 16

# Suhteellinen toleranssi ehdolle η = η_max.
SIVUAMISVYO = 1e-9


class Tila(Valintakentta):
  SERTIFIOITU = 'Certified'
  EI_SERTIFIOITU = 'NotCertified'


class Syy(Valintakentta):
  ''' Syy, jonka vuoksi sertifiointi epäonnistui. '''
  NU_LIIAN_SUURI = 'NuTooLarge'
  EHTO_A_EI_TOTEUDU = 'ConstraintAFails'
  SADE_LIIAN_PIENI = 'RadiusTooSmall'
  LAHTOPISTE_ON_RATKAISU = 'InitialPointIsRoot'


class Reuna(Valintakentta):
  ''' Yksikäsitteisyyspallon reuna: suljettu (B1) tai avoin (B2). '''
  SULJETTU = 'Closed'
  AVOIN = 'Open'


@dataclass(frozen=True, kw_only=True)
class Sertifikaatti(Sanoma):
  '''
  Ehtojoukon Υ johtopäätökset: iteraatio pysyy pallossa B̄(x0, ν*)
  ja suppenee ratkaisuun, joka on yksikäsitteinen pallossa
  B̄(x0, λ*) (suljettu) tai B(x0, λ*) (avoin).
  '''

  ulkoiset_nimet = {
    'tila': 'status',
    'syy': 'reason',
    'nu_tahti': 'nu_star',
    'nu_tahti_tahti': 'nu_star_star',
    'gamma_tahti': 'gamma_star',
    'lambda_tahti': 'lambda_star',
    'reuna': 'uniqueness_boundary',
    'skalaarijono': 'scalar_sequence',
    'tarvittava_nu_tahti': 'required_nu_star',
  }
  ohitettavat = frozenset({'malli'})

  tila: Tila
  syy: Syy | Vakio = puuttuu
  nu: float
  eta: float
  R: float
  nu_tahti: float | Vakio = puuttuu
  nu_tahti_tahti: float | Vakio = puuttuu
  gamma_tahti: float | Vakio = puuttuu
  lambda_tahti: float | Vakio = puuttuu
  reuna: Reuna | Vakio = puuttuu
  skalaarijono: tuple[float, ...] = ()
  tarvittava_nu_tahti: float | Vakio = puuttuu

  # Malli, josta sertifikaatti laskettiin (ei välitetä sanomassa).
  malli: Valinnainen[MajoranttiMalli] = field(
    default=ei_syotetty, compare=False, repr=False,
  )

  class Puuttuu(VirheellinenSyote):
    ''' Toiminto vaatii sertifioidun mallin. '''

  @property
  def sertifioitu(self) -> bool:
    return self.tila is Tila.SERTIFIOITU

  def skalaaritermit(self, lukumaara: int) -> list[float]:
    '''
    Skalaarijonon termit v_0 ... v_{lukumaara-1}. Esikatselun
    jälkeiset termit lasketaan jatkamalla jonoa mallista.
    '''
    if not self.sertifioitu:
      raise self.Puuttuu('Sertifikaatti ei ole voimassa.')
    if lukumaara <= len(self.skalaarijono):
      return list(self.skalaarijono[:lukumaara])
    if self.malli is ei_syotetty:
      raise self.Puuttuu(
        'Esikatselua pidempi jono vaatii sertifikaatin mallin.'
      )
    return list(itertools.islice(self.malli.skalaaritermit(), lukumaara))
    # def skalaaritermit

  # class Sertifikaatti


def holder_raja(alpha: float, nu: float) -> float:
  ''' Ehdon l0·η^α <= (1 - ν)^(α+1)·[α/(1+α)]^α oikea puoli. '''
  return (1.0 - nu) ** (alpha + 1.0) * (alpha / (1.0 + alpha)) ** alpha


def holder_eta_max(
  l0: float,
  alpha: float,
  nu: float,
  *,
  rajaton_sallittu: bool = True,
) -> float | Vakio:
  '''
  Suurin sallittu η: η_max = ((1 - ν)^(α+1)·[α/(1+α)]^α / l0)^(1/α).

  Kun l0 = 0, η_max = `rajaton` (tai poikkeus, mikäli
  `rajaton_sallittu` on epätosi).
  '''
  if l0 == 0:
    if not rajaton_sallittu:
      raise HolderParametrit.RappeutunutMitta(
        'l0 = 0: η_max on rajaton.'
      )
    return rajaton
  return (holder_raja(alpha, nu) / l0) ** (1.0 / alpha)
  # def holder_eta_max


@dataclass(frozen=True, kw_only=True)
class HolderParametrit:
  '''
  Hölder-tapauksen parametrit: ||B(F'(x) - F'(x0))|| <= l0·||x - x0||^α,
  ν = ||B·F'(x0) - I|| ja η >= ||B·F(x0)||.
  '''

  l0: float
  alpha: float = 1.0
  nu: float = 0.0
  eta: float

  class VirheellisetParametrit(VirheellinenSyote):
    pass

  class EhtoEiToteudu(VirheellinenSyote):
    ''' Suppenemisehto ei ole voimassa. '''

  class RappeutunutMitta(VirheellinenSyote):
    ''' l0 = 0: äärellistä η_max-arvoa ei ole. '''

  def __post_init__(self):
    if not (math.isfinite(self.l0) and self.l0 >= 0):
      raise self.VirheellisetParametrit(f'l0 = {self.l0!r}')
    if not 0.0 < self.alpha <= 1.0:
      raise self.VirheellisetParametrit(f'α = {self.alpha!r}')
    if not 0.0 <= self.nu < 1.0:
      raise self.VirheellisetParametrit(f'ν = {self.nu!r}')
    if not (math.isfinite(self.eta) and self.eta > 0):
      raise self.VirheellisetParametrit(f'η = {self.eta!r}')
    # def __post_init__

  def mitta(self) -> HolderMitta:
    return HolderMitta(l0=self.l0, alpha=self.alpha, nu=self.nu)

  def malli(self, R: float) -> MajoranttiMalli:
    return MajoranttiMalli(eta=self.eta, R=R, omega=self.mitta())

  def eta_max(self) -> float | Vakio:
    return holder_eta_max(self.l0, self.alpha, self.nu)

  def ehto(self) -> bool:
    return tarkista_holder_ehto(self)

  def juuret(self, R: float, tol: float = JUURITOLERANSSI):
    return holder_juuret(self, R, tol)

  # class HolderParametrit


def tarkista_holder_ehto(p: HolderParametrit) -> bool:
  ''' l0·η^α <= (1 - ν)^(α+1)·[α/(1+α)]^α (yhtäsuuruus sallittu). '''
  return p.l0 * p.eta ** p.alpha <= holder_raja(p.alpha, p.nu)


def holder_juuret(
  p: HolderParametrit,
  R: float,
  tol: float = JUURITOLERANSSI,
) -> tuple[float | Vakio, float | Vakio]:
  '''
  Yhtälön l0·v^(1+α)/(1+α) - (1 - ν)·v + η = 0 pienin ja suurin juuri
  välillä [0, R].

  Lipschitz-tapauksessa (α = 1) juuret lasketaan toisen asteen
  yhtälön ratkaisukaavalla, muuten puolittamalla.
  '''
  if not tarkista_holder_ehto(p):
    raise p.EhtoEiToteudu(
      f'l0·η^α = {p.l0 * p.eta ** p.alpha!r} >'
      f' {holder_raja(p.alpha, p.nu)!r}'
    )
  if p.alpha != 1.0:
    malli = p.malli(R)
    pienin = malli.pienin_juuri(tol)
    if pienin is puuttuu:
      return puuttuu, puuttuu
    return pienin, malli.suurin_juuri(tol)

  a = 1.0 - p.nu
  summa = a + math.sqrt(max(0.0, a * a - 2.0 * p.l0 * p.eta))
  pienin = 2.0 * p.eta / summa
  if pienin > R:
    return puuttuu, puuttuu
  if p.l0 == 0 or (suurin := summa / p.l0) > R:
    return pienin, reunalla
  if suurin - pienin < SIVUAMISKERROIN * tol * max(1.0, p.eta):
    suurin = pienin
  return pienin, suurin
  # def holder_juuret


def _sivuaa(malli: MajoranttiMalli) -> bool:
  ''' Onko Hölder-mallin η suhteellisesti lähellä arvoa η_max? '''
  mitta = malli.omega
  if not isinstance(mitta, HolderMitta) or mitta.nu >= 1:
    return False
  eta_max = holder_eta_max(mitta.l0, mitta.alpha, mitta.nu)
  return eta_max is not rajaton \
  and abs(malli.eta - eta_max) <= SIVUAMISVYO * eta_max
  # def _sivuaa


def _tarvittava_nu_tahti(
  malli: MajoranttiMalli,
  tol: float,
) -> float | Vakio:
  '''
  Hölder-mitalla, jolla ω_B(R) < 1: pienin juuri, joka saataisiin
  riittävän suurella säteellä R. Muuten `puuttuu`.
  '''
  mitta = malli.omega
  if not isinstance(mitta, HolderMitta):
    return puuttuu
  if (ylitys := mitta.ylitys(1.0)) is not rajaton and ylitys <= malli.R:
    return puuttuu
  p = HolderParametrit(
    l0=mitta.l0, alpha=mitta.alpha, nu=mitta.nu, eta=malli.eta
  )
  if not p.ehto():
    return puuttuu
  if ylitys is rajaton:
    return malli.eta / (1.0 - mitta.nu)
  return MajoranttiMalli(
    eta=malli.eta, R=ylitys, omega=mitta
  ).pienin_juuri(tol)
  # def _tarvittava_nu_tahti


def sertifioi(
  malli: MajoranttiMalli,
  tol: float = JUURITOLERANSSI,
) -> Sertifikaatti:
  '''
  Tarkista ehtojoukko Υ ja muodosta sertifikaatti.

  Ei-sertifioitu tulos palautetaan sertifikaattina syineen:
  ν >= 1 (NuTooLarge), φ(γ*) > γ* (ConstraintAFails) tai
  Hölder-mitalla liian pieni R (RadiusTooSmall).
  '''
  perus = {'nu': malli.nu, 'eta': malli.eta, 'R': malli.R, 'malli': malli}
  if malli.nu >= 1:
    logger.info('Ei sertifioitu: ν = %r >= 1', malli.nu)
    return Sertifikaatti(
      tila=Tila.EI_SERTIFIOITU, syy=Syy.NU_LIIAN_SUURI, **perus
    )

  juuret = malli.juuret(tol)
  if juuret.nu_tahti is puuttuu:
    tarvittava = _tarvittava_nu_tahti(malli, tol)
    syy = (
      Syy.EHTO_A_EI_TOTEUDU if tarvittava is puuttuu
      else Syy.SADE_LIIAN_PIENI
    )
    logger.info('Ei sertifioitu: %s', syy)
    return Sertifikaatti(
      tila=Tila.EI_SERTIFIOITU,
      syy=syy,
      gamma_tahti=juuret.gamma_tahti,
      tarvittava_nu_tahti=tarvittava,
      **perus
    )

  nu_tahti_tahti = juuret.nu_tahti_tahti
  lambda_tahti, tapaus = juuret.lambda_tahti, juuret.tapaus
  if _sivuaa(malli):
    nu_tahti_tahti = lambda_tahti = juuret.nu_tahti
    tapaus = Tapaus.B1

  return Sertifikaatti(
    tila=Tila.SERTIFIOITU,
    nu_tahti=juuret.nu_tahti,
    nu_tahti_tahti=nu_tahti_tahti,
    gamma_tahti=juuret.gamma_tahti,
    lambda_tahti=lambda_tahti,
    reuna=Reuna.SULJETTU if tapaus is Tapaus.B1 else Reuna.AVOIN,
    skalaarijono=tuple(itertools.islice(malli.skalaaritermit(), ESIKATSELU)),
    **perus
  )
  # def sertifioi
