import math

import numpy as np
import pytest

from vakiokulma.sertifikaatti import HolderParametrit
from vakiokulma.tyokalut import ei_sovellettavissa, puuttuu, rajaton, reunalla
from vakiokulma.vertailu import (
  VAITETTY_JARJESTYS,
  VertailuRaportti,
  ahues_ehto,
  ahues_eta_max,
  ahues_f,
  ahues_juuret,
  kantorovich_ehto,
  kiintopisteehto,
  vertaa,
)


def test_ahues_f():
  p = HolderParametrit(l0=1.0, eta=0.25)
  assert ahues_f(p, 0.0) == 0.25
  assert ahues_f(p, 0.5) == 0.0


@pytest.mark.parametrize('alpha,nu', [(1.0, 0.0), (0.5, 0.2), (0.3, 0.7)])
def test_ahues_f_ylittaa_majorantin(alpha, nu):
  ''' f - g = l0·v^(1+α)·α/(1+α) >= 0. '''
  p = HolderParametrit(l0=1.3, alpha=alpha, nu=nu, eta=0.01)
  malli = p.malli(5.0)
  for v in np.linspace(0.0, 5.0, 21):
    assert ahues_f(p, v) - malli.g(v) == pytest.approx(
      1.3 * v ** (1 + alpha) * alpha / (1 + alpha), abs=1e-12
    )


def test_ahues_eta_max():
  assert ahues_eta_max(1.0, 1.0, 0.0) == 0.25
  assert ahues_eta_max(1.0, 1.0, 0.5) == pytest.approx(0.0625)
  assert ahues_eta_max(0.0, 1.0, 0.0) is rajaton
  assert ahues_ehto(HolderParametrit(l0=1.0, eta=0.25)) == (True, 0.25)
  assert not ahues_ehto(HolderParametrit(l0=1.0, eta=0.26))[0]


def test_ahues_juuret():
  pienin, suurin = ahues_juuret(HolderParametrit(l0=1.0, eta=0.25), 10.0)
  assert pienin == pytest.approx(0.5, abs=1e-7)
  assert suurin == pytest.approx(0.5, abs=1e-7)

  pienin, suurin = ahues_juuret(HolderParametrit(l0=0.5, eta=0.25), 10.0)
  assert pienin == pytest.approx(1 - math.sqrt(0.5), abs=1e-10)
  assert suurin == pytest.approx(1 + math.sqrt(0.5), abs=1e-10)

  assert ahues_juuret(
    HolderParametrit(l0=0.0, nu=0.5, eta=0.2), 10.0
  ) == (pytest.approx(0.4), reunalla)

  with pytest.raises(HolderParametrit.EhtoEiToteudu):
    ahues_juuret(HolderParametrit(l0=1.0, eta=0.4), 10.0)


def test_virheellinen_delta():
  with pytest.raises(HolderParametrit.VirheellisetParametrit):
    ahues_f(HolderParametrit(l0=1.0, eta=0.1), 0.5, delta=1.0)


def test_kantorovich_ehto():
  assert kantorovich_ehto(1.0, 0.5)
  assert not kantorovich_ehto(1.0, 0.5000001)


def test_kiintopisteehto():
  p = HolderParametrit(l0=0.5, eta=0.5)
  assert kiintopisteehto(p.malli(3.0))
  assert not kiintopisteehto(p.malli(10.0))
  assert not kiintopisteehto(p.malli(0.5))


def test_vertaa_kaikki_voimassa():
  raportti = vertaa(HolderParametrit(l0=1.0, eta=0.25), 10.0)
  assert raportti.uusi_ehto
  assert raportti.ahues_ehto
  assert raportti.kantorovich_ehto is True
  assert raportti.uusi_eta_max == 0.5
  assert raportti.ahues_eta_max == 0.25
  assert raportti.eta_max_suhde == 2.0
  assert raportti.supistussade == 1.0


def test_vertaa_vain_uusi_ehto():
  raportti = vertaa(HolderParametrit(l0=1.0, eta=0.4), 10.0)
  assert raportti.uusi_ehto
  assert not raportti.ahues_ehto
  assert raportti.r_tahti is puuttuu
  assert raportti.sisaltyvyys is puuttuu
  assert raportti.havaittu_jarjestys is puuttuu


def test_vertaa_ei_kumpaakaan():
  raportti = vertaa(HolderParametrit(l0=1.0, eta=0.6), 10.0)
  assert not raportti.uusi_ehto
  assert not raportti.ahues_ehto
  assert not raportti.kantorovich_ehto
  assert raportti.nu_tahti is puuttuu
  assert raportti.lambda_tahti is puuttuu
  assert raportti.lambda_kattaa_supistussateen is ei_sovellettavissa


def test_vertaa_sisaltyvyys():
  raportti = vertaa(HolderParametrit(l0=1.0, eta=0.2), 10.0)
  nu_tahti = (1 - math.sqrt(0.6)) / 1.0
  assert raportti.nu_tahti == pytest.approx(nu_tahti, abs=1e-12)
  assert raportti.r_tahti == pytest.approx(
    (1 - math.sqrt(0.2)) / 2, abs=1e-10
  )
  assert raportti.sisaltyvyys is True
  assert raportti.vaitetty_jarjestys == VAITETTY_JARJESTYS
  assert raportti.havaittu_jarjestys == 'ν* <= r*'
  assert raportti.lambda_tahti == raportti.nu_tahti_tahti
  assert raportti.lambda_kattaa_supistussateen is True


def test_vertaa_murtoeksponentti():
  raportti = vertaa(HolderParametrit(l0=1.0, alpha=0.5, eta=0.05), 10.0)
  assert raportti.eta_max_suhde == pytest.approx(2.25, rel=1e-12)
  assert raportti.kantorovich_ehto is ei_sovellettavissa


def test_vertaa_lineaarinen():
  raportti = vertaa(HolderParametrit(l0=0.0, nu=0.5, eta=0.2), 10.0)
  assert raportti.uusi_eta_max is rajaton
  assert raportti.eta_max_suhde == 2.0
  assert raportti.nu_tahti_tahti is reunalla
  assert raportti.lambda_tahti == 10.0
  assert raportti.sisaltyvyys is True
  assert raportti.lambda_kattaa_supistussateen is ei_sovellettavissa


def test_uusi_ehto_on_heikompi():
  ''' Ahues-ehto takaa uuden ehdon ja juurivälien sisäkkäisyyden. '''
  rng = np.random.default_rng(11)
  for _ in range(200):
    alpha = rng.uniform(0.25, 1.0)
    nu = rng.uniform(0.0, 0.9)
    l0 = 10 ** rng.uniform(-1.0, 1.0)
    p = HolderParametrit(l0=l0, alpha=alpha, nu=nu, eta=1.0)
    eta = rng.uniform(0.01, 1.5) * p.eta_max()
    raportti = vertaa(
      HolderParametrit(l0=l0, alpha=alpha, nu=nu, eta=eta),
      R=10 * ((1 - nu) / l0) ** (1 / alpha),
    )
    if raportti.ahues_ehto:
      assert raportti.uusi_ehto
      assert raportti.sisaltyvyys is True
    assert raportti.eta_max_suhde == pytest.approx(
      (1 + alpha) ** (1 / alpha), rel=1e-12
    )
    # for _ in range


def test_kantorovich_yhtyy_uuteen_ehtoon():
  for eta in np.arange(1, 1001) / 1000:
    raportti = vertaa(HolderParametrit(l0=1.0, eta=float(eta)), 10.0)
    assert raportti.uusi_ehto == raportti.kantorovich_ehto
    # for eta in


def test_taulukko():
  raportti = vertaa(HolderParametrit(l0=1.0, eta=0.25), 10.0)
  rivit = raportti.taulukko().splitlines()
  assert len(rivit) == len(raportti.lahteva())
  assert any(
    rivi.split() == ['new_condition', 'true'] for rivi in rivit
  )
  assert any(
    rivi.split() == ['eta_max_ratio', '2.0'] for rivi in rivit
  )
  leveys = max(len(avain) for avain in raportti.lahteva())
  assert all(
    rivi[leveys:leveys + 2] == '  ' and rivi[leveys + 2] != ' '
    for rivi in rivit
  )


def test_raportti_sanomana():
  raportti = vertaa(HolderParametrit(l0=0.0, nu=0.5, eta=0.2), 10.0)
  data = raportti.lahteva()
  assert data['kantorovich_condition'] == 'not_applicable'
  assert data['nu_star_star'] == 'at_boundary'
  assert VertailuRaportti.saapuva(data) == raportti


def test_ahues_kynnys_ruudukolla():
  for eta in np.arange(1, 1001) / 1000:
    ehto, _ = ahues_ehto(HolderParametrit(l0=1.0, eta=float(eta)))
    assert ehto == (4 * eta <= 1)
    # for eta in


@pytest.mark.parametrize('alpha', [0.25, 0.5, 0.75, 1.0])
@pytest.mark.parametrize('nu', [0.0, 0.3, 0.6, 0.9])
@pytest.mark.parametrize('l0', [0.1, 1.0, 10.0])
def test_eta_max_suhde(alpha, nu, l0):
  p = HolderParametrit(l0=l0, alpha=alpha, nu=nu, eta=1.0)
  assert p.eta_max() / ahues_eta_max(l0, alpha, nu) == pytest.approx(
    (1 + alpha) ** (1 / alpha), abs=1e-12
  )


@pytest.mark.parametrize('alpha', [0.25, 0.5, 1.0])
def test_uusi_ehto_kattaa_enemman(alpha):
  uusi_max = HolderParametrit(l0=1.0, alpha=alpha, eta=1.0).eta_max()
  tulokset = [
    (raportti.uusi_ehto, raportti.ahues_ehto)
    for raportti in (
      vertaa(HolderParametrit(l0=1.0, alpha=alpha, eta=eta), 10.0)
      for eta in np.linspace(0.01, 1.2, 60) * uusi_max
    )
  ]
  assert (True, False) in tulokset
  assert (False, True) not in tulokset
