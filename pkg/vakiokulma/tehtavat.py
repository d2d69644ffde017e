'''
Valmiit testitehtävät, joiden vakiot (η, l0, α, ν) tunnetaan
suljetussa muodossa.

Tehtävä valitaan nimellä ja parametreilla:
>>> tehtava, analyyttinen = TehtavaKuvaus(
...   nimi='scalar_quadratic', parametrit={'c': 2, 'x0': 2, 'b': 0.25}
... ).rakenna()
'''

from dataclasses import dataclass, field
import functools
import logging
import math
from typing import Any, Callable

import numpy as np

from .majorantti import HolderMitta
from .normit import Normi
from .ratkaisija import Tehtava
from .sanoma import Sanoma
from .sertifikaatti import HolderParametrit
from .tyokalut import (
  Valinnainen,
  Vakio,
  VirheellinenSyote,
  ei_syotetty,
  puuttuu,
)


logger = logging.getLogger(__name__)


# Chandrasekharin H-yhtälön suurin sallittu solmumäärä.
CHANDRASEKHAR_MAKSIMI_N = 32


class TuntematonTehtava(VirheellinenSyote):
  pass


class VirheellisetParametrit(VirheellinenSyote):
  pass


@dataclass(frozen=True, kw_only=True)
class Analyyttinen(Sanoma):
  ''' Tehtävän tunnetut vakiot sekä mahdollinen tarkka ratkaisu. '''

  ulkoiset_nimet = {'ratkaisu': 'known_solution'}

  l0: float
  alpha: float = 1.0
  nu: float = 0.0
  eta: float
  ratkaisu: tuple[float, ...] | Vakio = puuttuu

  def mitta(self) -> HolderMitta:
    return HolderMitta(l0=self.l0, alpha=self.alpha, nu=self.nu)

  def parametrit(self) -> HolderParametrit:
    return HolderParametrit(
      l0=self.l0, alpha=self.alpha, nu=self.nu, eta=self.eta
    )

  # class Analyyttinen


@dataclass(frozen=True, kw_only=True)
class Rakentaja:
  nimi: str
  kuvaus: str
  oletukset: dict[str, Any]
  R: float
  funktio: Callable

  # class Rakentaja


_rakentajat: dict[str, Rakentaja] = {}


def rakentaja(nimi: str, kuvaus: str, *, R: float, **oletukset):
  '''
  Rekisteröi tehtävän rakentaja nimellä `nimi`. Rakentaja kutsutaan
  muodossa `funktio(normi=..., R=..., **parametrit)`.
  '''
  def _rekisteroi(funktio):
    _rakentajat[nimi] = Rakentaja(
      nimi=nimi, kuvaus=kuvaus, oletukset=oletukset, R=R, funktio=funktio
    )
    return funktio
  return _rekisteroi
  # def rakentaja


def luettelo() -> list[Rakentaja]:
  ''' Rekisteröidyt tehtävät nimen mukaan järjestettynä. '''
  return sorted(_rakentajat.values(), key=lambda r: r.nimi)


@dataclass(frozen=True, kw_only=True)
class TehtavaKuvaus(Sanoma):
  ''' Tehtävän nimi, parametrit, normi ja luottamussäde. '''

  ulkoiset_nimet = {
    'nimi': 'fixture',
    'parametrit': 'params',
    'normi': 'norm',
  }

  nimi: str
  parametrit: dict[str, Any] = field(default_factory=dict)
  normi: Normi = Normi.MAKSIMI
  R: Valinnainen[float] = ei_syotetty

  def rakenna(self) -> tuple[Tehtava, Analyyttinen | Vakio]:
    '''
    Muodosta tehtävä ja sen analyyttiset vakiot (tai `puuttuu`).
    '''
    try:
      rakentaja_ = _rakentajat[self.nimi]
    except KeyError:
      raise TuntematonTehtava(
        f'Tuntematon tehtävä {self.nimi!r};'
        f' tunnetut: {", ".join(sorted(_rakentajat))}'
      ) from None
    if tuntemattomat := set(self.parametrit) - set(rakentaja_.oletukset):
      raise VirheellisetParametrit(
        f'{self.nimi}: tuntemattomat parametrit {sorted(tuntemattomat)}'
      )
    parametrit = {**rakentaja_.oletukset, **self.parametrit}
    R = float(rakentaja_.R if self.R is ei_syotetty else self.R)
    logger.debug('Rakennetaan %s(%r), R = %r', self.nimi, parametrit, R)
    try:
      return rakentaja_.funktio(
        normi=Normi.saapuva(self.normi), R=R, **parametrit
      )
    except VirheellinenSyote:
      raise
    except (ArithmeticError, ValueError, TypeError, np.linalg.LinAlgError) \
    as exc:
      raise VirheellisetParametrit(f'{self.nimi}: {exc}') from exc
    # def rakenna

  # class TehtavaKuvaus


def _vektori(arvo) -> np.ndarray:
  return np.atleast_1d(np.asarray(arvo, dtype=float))


def _matriisi(arvo) -> np.ndarray:
  return np.atleast_2d(np.asarray(arvo, dtype=float))


def _skalaari(f):
  ''' Kääri skalaarifunktio vektoreita käsitteleväksi. '''
  @functools.wraps(f)
  def _f(x):
    return np.array([f(float(x[0]))])
  return _f
  # def _skalaari


@rakentaja(
  'scalar_quadratic',
  'F(x) = x² - c, B = b',
  R=10.0, c=2.0, x0=2.0, b=0.25,
)
def skalaari_neliollinen(*, normi: Normi, R: float, c, x0, b):
  c, x0, b = float(c), float(x0), float(b)
  tehtava = Tehtava(
    F=_skalaari(lambda x: x * x - c),
    jacobiaani=lambda x: np.array([[2.0 * x[0]]]),
    B=[[b]],
    x0=[x0],
    R=R,
    normi=normi,
  )
  return tehtava, Analyyttinen(
    l0=2.0 * abs(b),
    nu=abs(1.0 - 2.0 * b * x0),
    eta=abs(b * (x0 * x0 - c)),
    ratkaisu=(math.copysign(math.sqrt(c), x0),) if c >= 0 else puuttuu,
  )
  # def skalaari_neliollinen


@rakentaja(
  'scalar_holder',
  'F(x) = sign(x - a)·|x - a|^(1+α)/(1+α) + c, B = b',
  R=0.9, a=0.0, alpha=0.5, c=-0.5, x0=1.0, b=1.0,
)
def skalaari_holder(*, normi: Normi, R: float, a, alpha, c, x0, b):
  a, alpha, c, x0, b = map(float, (a, alpha, c, x0, b))
  if not 0.0 < alpha <= 1.0:
    raise VirheellisetParametrit(f'α = {alpha!r} ei ole välillä ]0, 1]')

  def F(x):
    return math.copysign(abs(x - a) ** (1.0 + alpha), x - a) \
    / (1.0 + alpha) + c

  tehtava = Tehtava(
    F=_skalaari(F),
    jacobiaani=lambda x: np.array([[abs(x[0] - a) ** alpha]]),
    B=[[b]],
    x0=[x0],
    R=R,
    normi=normi,
  )
  return tehtava, Analyyttinen(
    l0=abs(b),
    alpha=alpha,
    nu=abs(1.0 - b * abs(x0 - a) ** alpha),
    eta=abs(b * F(x0)),
    ratkaisu=(
      a - math.copysign((abs(c) * (1.0 + alpha)) ** (1.0 / (1.0 + alpha)), c),
    ),
  )
  # def skalaari_holder


def _poly2d_derivaatta(x, a):
  return np.array([
    [2.0 * x[0] + x[1], x[0]],
    [-a * x[1], 2.0 * x[1] - a * x[0]],
  ])
  # def _poly2d_derivaatta


@rakentaja(
  'poly2d',
  'F(x) = (x1² + x1·x2 - t1, x2² - a·x1·x2 - t2), B = F\'(x0)⁻¹',
  R=1.0, a=0.5, solution=(1.0, 2.0), x0=(1.1, 1.9),
)
def poly2d(*, normi: Normi, R: float, a, solution, x0):
  a = float(a)
  s, x0 = _vektori(solution), _vektori(x0)
  if s.shape != (2,) or x0.shape != (2,):
    raise VirheellisetParametrit('solution ja x0 ovat 2-vektoreita.')
  t = np.array([s[0] ** 2 + s[0] * s[1], s[1] ** 2 - a * s[0] * s[1]])

  def F(x):
    return np.array([
      x[0] ** 2 + x[0] * x[1] - t[0],
      x[1] ** 2 - a * x[0] * x[1] - t[1],
    ])

  B = np.linalg.inv(_poly2d_derivaatta(x0, a))
  tehtava = Tehtava(
    F=F,
    jacobiaani=lambda x: _poly2d_derivaatta(x, a),
    B=B,
    x0=x0,
    R=R,
    normi=normi,
  )
  # Jacobiaani on affiini, joten poikkeama B·(F'(x) - F'(x0)) on
  # lineaarinen siirtymässä ja saavuttaa maksiminsa yksikköpallon kärjissä.
  if normi is Normi.MAKSIMI:
    karjet = [np.array([1.0, 1.0]), np.array([1.0, -1.0])]
  elif normi is Normi.YKSI:
    karjet = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
  else:
    return tehtava, puuttuu
  J0 = _poly2d_derivaatta(x0, a)
  l0 = max(
    normi.matriisi(B @ (_poly2d_derivaatta(x0 + d, a) - J0))
    for d in karjet
  )
  return tehtava, Analyyttinen(
    l0=l0, nu=tehtava.nu(), eta=tehtava.eta(), ratkaisu=tuple(map(float, s))
  )
  # def poly2d


@rakentaja(
  'chandrasekhar',
  'Chandrasekharin H-yhtälö keskipistesäännöllä, B = F\'(1)⁻¹',
  R=2.0, c=0.5, n=16,
)
def chandrasekhar(*, normi: Normi, R: float, c, n):
  c, n = float(c), int(n)
  if not 0 < n <= CHANDRASEKHAR_MAKSIMI_N:
    raise VirheellisetParametrit(
      f'n = {n} ei ole välillä 1 ... {CHANDRASEKHAR_MAKSIMI_N}'
    )
  if not 0.0 < c < 1.0:
    raise VirheellisetParametrit(f'c = {c!r} ei ole välillä ]0, 1[')
  mu = (np.arange(1, n + 1) - 0.5) / n
  A = (1.0 / n) * mu[:, None] / (mu[:, None] + mu[None, :])

  def F(x):
    return x - 1.0 - 0.5 * c * x * (A @ x)

  def jacobiaani(x):
    return np.eye(n) - 0.5 * c * (np.diag(A @ x) + x[:, None] * A)

  x0 = np.ones(n)
  B = np.linalg.inv(jacobiaani(x0))
  tehtava = Tehtava(
    F=F, jacobiaani=jacobiaani, B=B, x0=x0, R=R, normi=normi
  )
  if normi is not Normi.MAKSIMI:
    return tehtava, puuttuu
  # |B·(diag(A·d) + diag(d)·A)| <= |B|·(diag(A·1) + A), kun ||d|| <= 1.
  l0 = Normi.MAKSIMI.matriisi(
    0.5 * c * np.abs(B) @ (np.diag(A.sum(axis=1)) + A)
  )
  return tehtava, Analyyttinen(l0=l0, nu=tehtava.nu(), eta=tehtava.eta())
  # def chandrasekhar


@rakentaja(
  'linear',
  'F(x) = A·x - b_vec, B = A⁻¹',
  R=10.0, A=((2.0, 1.0), (1.0, 3.0)), b_vec=(1.0, 2.0), x0=ei_syotetty,
)
def lineaarinen(*, normi: Normi, R: float, A, b_vec, x0):
  A, b_vec = _matriisi(A), _vektori(b_vec)
  n = b_vec.size
  if A.shape != (n, n):
    raise VirheellisetParametrit(f'A:n muoto {A.shape} ei ole ({n}, {n}).')
  x0 = np.zeros(n) if x0 is ei_syotetty else _vektori(x0)
  tehtava = Tehtava(
    F=lambda x: A @ x - b_vec,
    jacobiaani=lambda x: A,
    B=np.linalg.inv(A),
    x0=x0,
    R=R,
    normi=normi,
  )
  return tehtava, Analyyttinen(
    l0=0.0,
    nu=tehtava.nu(),
    eta=tehtava.eta(),
    ratkaisu=tuple(map(float, np.linalg.solve(A, b_vec))),
  )
  # def lineaarinen
