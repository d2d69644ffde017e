'''
Kilpailevat semilokaalit suppenemisehdot Hölder-tapauksessa:
f-funktioon perustuva ehto (Ahues), klassinen Kantorovichin ehto
sekä kiintopistemuotoinen ehto φ(R) <= R. Vertailuraportti kokoaa
ehdot, juuret ja η_max-suhteen rinnakkain.
'''

from dataclasses import dataclass
import logging

from .majorantti import JUURITOLERANSSI, MajoranttiMalli, kuperan_juuret
from .sanoma import Sanoma
from .sertifikaatti import (
  HolderParametrit,
  holder_eta_max,
  holder_juuret,
  holder_raja,
  tarkista_holder_ehto,
)
from .tyokalut import (
  Valinnainen,
  Vakio,
  ei_sovellettavissa,
  ei_syotetty,
  puuttuu,
  rajaton,
  reunalla,
)


logger = logging.getLogger(__name__)


# Kirjallisuudessa esitetty minimijuurten järjestys.
VAITETTY_JARJESTYS = 'r* < ν*'


def _delta(p: HolderParametrit, delta: Valinnainen[float]) -> float:
  ''' δ oletuksena ν (kun A⁻¹ = B). '''
  delta = p.nu if delta is ei_syotetty else delta
  if not 0.0 <= delta < 1.0:
    raise HolderParametrit.VirheellisetParametrit(f'δ = {delta!r}')
  return delta
  # def _delta


def ahues_f(
  p: HolderParametrit,
  v: float,
  delta: Valinnainen[float] = ei_syotetty,
) -> float:
  ''' f(v) = l0·v^(1+α) - (1 - δ)·v + η. '''
  return p.l0 * v ** (1.0 + p.alpha) - (1.0 - _delta(p, delta)) * v + p.eta


def ahues_eta_max(l0: float, alpha: float, nu: float) -> float | Vakio:
  ''' η_max = ((1 - ν)^(α+1)·[α/(1+α)]^α·(1+α)⁻¹ / l0)^(1/α). '''
  if l0 == 0:
    return rajaton
  return (holder_raja(alpha, nu) / (1.0 + alpha) / l0) ** (1.0 / alpha)


def ahues_ehto(
  p: HolderParametrit,
  delta: Valinnainen[float] = ei_syotetty,
) -> tuple[bool, float | Vakio]:
  '''
  l0·η^α <= (1 - δ)^(α+1)·[α/(1+α)]^α·(1+α)⁻¹ sekä vastaava η_max.
  '''
  delta = _delta(p, delta)
  return (
    p.l0 * p.eta ** p.alpha <= holder_raja(p.alpha, delta) / (1.0 + p.alpha),
    ahues_eta_max(p.l0, p.alpha, delta),
  )
  # def ahues_ehto


def ahues_juuret(
  p: HolderParametrit,
  R: float,
  tol: float = JUURITOLERANSSI,
  delta: Valinnainen[float] = ei_syotetty,
) -> tuple[float | Vakio, float | Vakio]:
  '''
  Kuperan funktion f pienin ja suurin juuri r*, r** välillä [0, R].

  f on kupera ja f(0) = η > 0; minimikohta on
  ((1 - δ) / (l0·(1 + α)))^(1/α).
  '''
  delta = _delta(p, delta)
  if not ahues_ehto(p, delta)[0]:
    raise p.EhtoEiToteudu('Ahues-ehto ei ole voimassa.')
  if p.l0 == 0:
    if (pienin := p.eta / (1.0 - delta)) > R:
      return puuttuu, puuttuu
    return pienin, reunalla
  minimikohta = min(
    R, ((1.0 - delta) / (p.l0 * (1.0 + p.alpha))) ** (1.0 / p.alpha)
  )
  return kuperan_juuret(
    lambda v: ahues_f(p, v, delta),
    minimikohta,
    R,
    tol * max(1.0, p.eta),
  )
  # def ahues_juuret


def kantorovich_ehto(l0: float, eta: float) -> bool:
  ''' 2·l0·η <= 1 (Lipschitz-tapaus, ν = 0). '''
  return 2.0 * l0 * eta <= 1.0


def kiintopisteehto(
  malli: MajoranttiMalli,
  tol: float = JUURITOLERANSSI,
) -> bool:
  '''
  Vanhempi kiintopistemuotoinen ehto: φ(R) <= R ja yhtälöllä
  v = φ(v) on täsmälleen yksi ratkaisu välillä [0, R].
  '''
  if malli.nu >= 1 or malli.g(malli.R) > 0:
    return False
  pienin, suurin = malli._juuripari(tol)  # pylint: disable=protected-access
  return pienin is not puuttuu and (suurin is reunalla or suurin == pienin)
  # def kiintopisteehto


def _ala(a, b, leveys: float) -> bool:
  ''' a <= b + leveys, missä `reunalla` tulkitaan mielivaltaisen suureksi. '''
  if b is reunalla:
    return True
  if a is reunalla:
    return False
  return a <= b + leveys
  # def _ala


@dataclass(frozen=True, kw_only=True)
class VertailuRaportti(Sanoma):
  ''' Uuden ehdon, Ahues-ehdon ja Kantorovichin ehdon rinnakkaisvertailu. '''

  ulkoiset_nimet = {
    'uusi_ehto': 'new_condition',
    'uusi_eta_max': 'new_eta_max',
    'ahues_ehto': 'ahues_condition',
    'ahues_eta_max': 'ahues_eta_max',
    'kantorovich_ehto': 'kantorovich_condition',
    'kiintopisteehto': 'fixed_point_condition',
    'nu_tahti': 'nu_star',
    'nu_tahti_tahti': 'nu_star_star',
    'lambda_tahti': 'lambda_star',
    'r_tahti': 'r_star',
    'r_tahti_tahti': 'r_star_star',
    'supistussade': 'contraction_radius',
    'lambda_kattaa_supistussateen': 'lambda_covers_contraction_radius',
    'eta_max_suhde': 'eta_max_ratio',
    'sisaltyvyys': 'containment',
    'vaitetty_jarjestys': 'claimed_ordering',
    'havaittu_jarjestys': 'observed_ordering',
  }

  l0: float
  alpha: float
  nu: float
  delta: float
  eta: float
  R: float
  uusi_ehto: bool
  uusi_eta_max: float | Vakio
  ahues_ehto: bool
  ahues_eta_max: float | Vakio
  kantorovich_ehto: bool | Vakio
  kiintopisteehto: bool
  nu_tahti: float | Vakio = puuttuu
  nu_tahti_tahti: float | Vakio = puuttuu
  lambda_tahti: float | Vakio = puuttuu
  r_tahti: float | Vakio = puuttuu
  r_tahti_tahti: float | Vakio = puuttuu
  supistussade: float
  lambda_kattaa_supistussateen: bool | Vakio = ei_sovellettavissa
  eta_max_suhde: float
  sisaltyvyys: bool | Vakio = puuttuu
  vaitetty_jarjestys: str = VAITETTY_JARJESTYS
  havaittu_jarjestys: str | Vakio = puuttuu

  def taulukko(self) -> str:
    ''' Tasattu tekstitaulukko. '''
    def _muotoile(arvo):
      if isinstance(arvo, Vakio):
        return arvo.nimi
      if isinstance(arvo, bool):
        return 'true' if arvo else 'false'
      if isinstance(arvo, float):
        return repr(arvo)
      return str(arvo)
    rivit = [
      (avain, _muotoile(arvo)) for avain, arvo in self.lahteva().items()
    ]
    leveys = max(len(avain) for avain, _ in rivit)
    return '\n'.join(
      f'{avain.ljust(leveys)}  {arvo}' for avain, arvo in rivit
    ) + '\n'
    # def taulukko

  # class VertailuRaportti


def vertaa(
  p: HolderParametrit,
  R: float,
  tol: float = JUURITOLERANSSI,
  delta: Valinnainen[float] = ei_syotetty,
) -> VertailuRaportti:
  '''
  Kokoa ehdot, juuret, säteet ja η_max-suhde. Puuttuvat suureet
  merkitään `puuttuu`-arvolla.
  '''
  delta = _delta(p, delta)
  uusi = tarkista_holder_ehto(p)
  ahues, ahues_max = ahues_ehto(p, delta)
  uusi_max = holder_eta_max(p.l0, p.alpha, p.nu)
  if uusi_max is rajaton or ahues_max is rajaton:
    suhde = (1.0 + p.alpha) ** (1.0 / p.alpha)
  else:
    suhde = uusi_max / ahues_max

  nu_tahti = nu_tahti_tahti = lambda_tahti = puuttuu
  if uusi:
    nu_tahti, nu_tahti_tahti = holder_juuret(p, R, tol)
  if nu_tahti_tahti is reunalla:
    lambda_tahti = R
  elif nu_tahti is not puuttuu:
    lambda_tahti = max(nu_tahti, nu_tahti_tahti)
  malli = p.malli(R)

  r_tahti = r_tahti_tahti = puuttuu
  if ahues:
    r_tahti, r_tahti_tahti = ahues_juuret(p, R, tol, delta)

  supistussade = malli.gamma_tahti()
  kattaa = ei_sovellettavissa
  if uusi and nu_tahti is not puuttuu \
  and isinstance(nu_tahti_tahti, float) \
  and (uusi_max is rajaton or p.eta < uusi_max):
    kattaa = lambda_tahti >= supistussade

  sisaltyvyys = havaittu = puuttuu
  if puuttuu not in (nu_tahti, r_tahti):
    leveys = tol * max(1.0, p.eta)
    sisaltyvyys = (
      _ala(nu_tahti, r_tahti, leveys)
      and _ala(r_tahti_tahti, nu_tahti_tahti, leveys)
    )
    havaittu = 'r* < ν*' if r_tahti < nu_tahti else 'ν* <= r*'

  logger.debug(
    'Vertailu: uusi %s, Ahues %s, suhde %r', uusi, ahues, suhde
  )
  return VertailuRaportti(
    l0=p.l0,
    alpha=p.alpha,
    nu=p.nu,
    delta=delta,
    eta=p.eta,
    R=R,
    uusi_ehto=uusi,
    uusi_eta_max=uusi_max,
    ahues_ehto=ahues,
    ahues_eta_max=ahues_max,
    kantorovich_ehto=(
      kantorovich_ehto(p.l0, p.eta)
      if p.alpha == 1.0 and p.nu == 0.0 else ei_sovellettavissa
    ),
    kiintopisteehto=kiintopisteehto(malli, tol),
    nu_tahti=nu_tahti,
    nu_tahti_tahti=nu_tahti_tahti,
    lambda_tahti=lambda_tahti,
    r_tahti=r_tahti,
    r_tahti_tahti=r_tahti_tahti,
    supistussade=supistussade,
    lambda_kattaa_supistussateen=kattaa,
    eta_max_suhde=suhde,
    sisaltyvyys=sisaltyvyys,
    havaittu_jarjestys=havaittu,
  )
  # def vertaa
