'''
Vektorinormit, niiden indusoimat matriisinormit sekä
pisteiden poiminta normin mukaisilta palloilta.
'''

import numpy as np

from .sanoma import Valintakentta


# Spektrinormin potenssi-iteraation askelmäärä ja aloitusvektorin siemen.
POTENSSI_ITERAATIOT = 50
POTENSSI_SIEMEN = 15210


class Normi(Valintakentta):
  ''' Avaruuden R^n normi; matriiseille käytetään indusoitua normia. '''

  MAKSIMI = 'max'
  YKSI = 'one'
  KAKSI = 'two'

  @property
  def _jarjestys(self) -> float:
    ''' `numpy.linalg.norm`-funktion `ord`-parametri. '''
    return {Normi.MAKSIMI: np.inf, Normi.YKSI: 1, Normi.KAKSI: 2}[self]

  def vektori(self, x: np.ndarray) -> float:
    ''' Vektorin normi. '''
    return float(np.linalg.norm(np.atleast_1d(x), ord=self._jarjestys))
    # def vektori

  def matriisi(self, a: np.ndarray) -> float:
    '''
    Indusoitu matriisinormi: suurin rivisumma (max), suurin
    sarakesumma (one) tai spektrinormi (two, potenssi-iteraatio).
    '''
    if self is Normi.KAKSI:
      return spektrinormi(a)
    return float(np.linalg.norm(np.atleast_2d(a), ord=self._jarjestys))
    # def matriisi

  def suunnat(
    self,
    n: int,
    lukumaara: int,
    rng: np.random.Generator,
  ) -> list[np.ndarray]:
    '''
    Poimi yksikköpallon pinnalta `lukumaara` suuntaa.

    Yksiulotteisessa tapauksessa pallo on kaksipisteinen {-1, +1}.
    Maksiminormilla ensimmäiset suunnat ovat kärjet ±(1, ..., 1),
    minkä jälkeen vuorottelevat satunnaiset kärjet ja normitetut
    Gaussin suunnat. Ykkösnormilla kärjet ovat ±e_i. Kakkosnormilla
    ensimmäiset suunnat ovat ±(1, ..., 1)/√n ja loput Gaussin suuntia.
    '''
    if n == 1:
      return [np.array([-1.0]), np.array([1.0])]
    suunnat = []
    if self is Normi.MAKSIMI:
      suunnat += [np.ones(n), -np.ones(n)]
    elif self is Normi.KAKSI:
      suunnat += [np.ones(n) / np.sqrt(n), -np.ones(n) / np.sqrt(n)]
    while len(suunnat) < lukumaara:
      if len(suunnat) % 2 and self is Normi.MAKSIMI:
        suunta = rng.choice((-1.0, 1.0), size=n)
      elif len(suunnat) % 2 and self is Normi.YKSI:
        suunta = np.zeros(n)
        suunta[rng.integers(n)] = rng.choice((-1.0, 1.0))
      else:
        suunta = rng.standard_normal(n)
      if (pituus := self.vektori(suunta)) > 0:
        suunnat.append(suunta / pituus)
      # while len(suunnat) < lukumaara
    return suunnat[:max(lukumaara, 2)]
    # def suunnat

  def pallon_sisalta(
    self,
    keskipiste: np.ndarray,
    sade: float,
    lukumaara: int,
    rng: np.random.Generator,
  ) -> list[np.ndarray]:
    '''
    Poimi `lukumaara` pistettä avoimen pallon B(keskipiste, sade) sisältä.

    Maksiminormilla (ja yksiulotteisena) pisteet ovat tasajakautuneita;
    muilla normeilla käytetään säteittäistä poimintaa
    suunta * sade * u^(1/n).
    '''
    keskipiste = np.atleast_1d(np.asarray(keskipiste, dtype=float))
    n = keskipiste.size
    if n == 1 or self is Normi.MAKSIMI:
      return [
        keskipiste + sade * rng.uniform(-1.0, 1.0, size=n)
        for _ in range(lukumaara)
      ]
    pisteet = []
    for _ in range(lukumaara):
      suunta = rng.standard_normal(n)
      suunta /= self.vektori(suunta)
      pisteet.append(keskipiste + suunta * sade * rng.uniform() ** (1.0 / n))
    return pisteet
    # def pallon_sisalta

  # class Normi


def spektrinormi(a: np.ndarray) -> float:
  '''
  Arvioi matriisin spektrinormi potenssi-iteraatiolla matriisille A^T A.

  Kiinteä askelmäärä ja aloitusvektori tekevät tuloksesta toistettavan;
  tulos on alaraja, joka yleensä tarkentuu muutamassa askeleessa.
  '''
  a = np.atleast_2d(np.asarray(a, dtype=float))
  if not np.any(a):
    return 0.0
  ata = a.T @ a
  x = np.random.default_rng(POTENSSI_SIEMEN).random(a.shape[1]) + 0.5
  x /= np.linalg.norm(x)
  for _ in range(POTENSSI_ITERAATIOT):
    y = ata @ x
    if (pituus := np.linalg.norm(y)) == 0:
      break
    x = y / pituus
  return float(np.linalg.norm(a @ x))
  # def spektrinormi
