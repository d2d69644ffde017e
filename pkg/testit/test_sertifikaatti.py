import math

import numpy as np
import pytest

from vakiokulma.json import JsonMuoto
from vakiokulma.majorantti import HolderMitta, MajoranttiMalli
from vakiokulma.sertifikaatti import (
  ESIKATSELU,
  HolderParametrit,
  Reuna,
  Sertifikaatti,
  Syy,
  Tila,
  holder_eta_max,
  holder_juuret,
  sertifioi,
  tarkista_holder_ehto,
)
from vakiokulma.tyokalut import VirheellinenSyote, puuttuu, rajaton, reunalla


def malli(eta=0.5, l0=0.5, R=10.0, **kwargs):
  return MajoranttiMalli(eta=eta, R=R, omega=HolderMitta(l0=l0, **kwargs))


def test_sertifioitu():
  sert = sertifioi(malli())
  assert sert.sertifioitu
  assert sert.tila is Tila.SERTIFIOITU
  assert sert.syy is puuttuu
  assert sert.nu_tahti == pytest.approx(2 - math.sqrt(2), abs=1e-10)
  assert sert.nu_tahti_tahti == pytest.approx(2 + math.sqrt(2), abs=1e-10)
  assert sert.lambda_tahti == sert.nu_tahti_tahti
  assert sert.gamma_tahti == 2.0
  assert sert.reuna is Reuna.AVOIN
  assert len(sert.skalaarijono) == ESIKATSELU
  assert sert.skalaarijono[:2] == (0.0, 0.5)


def test_sertifioitu_reunalla():
  sert = sertifioi(malli(R=3.0))
  assert sert.nu_tahti_tahti is reunalla
  assert sert.lambda_tahti == 3.0
  assert sert.reuna is Reuna.SULJETTU


def test_nu_liian_suuri():
  sert = sertifioi(malli(nu=1.0, l0=1.0, eta=0.1))
  assert not sert.sertifioitu
  assert sert.syy is Syy.NU_LIIAN_SUURI
  assert sert.nu_tahti is puuttuu


def test_ehto_a_ei_toteudu():
  sert = sertifioi(malli(eta=0.6, l0=1.0))
  assert sert.tila is Tila.EI_SERTIFIOITU
  assert sert.syy is Syy.EHTO_A_EI_TOTEUDU
  assert sert.gamma_tahti == 1.0
  assert sert.tarvittava_nu_tahti is puuttuu


def test_sade_liian_pieni():
  sert = sertifioi(malli(R=0.5))
  assert sert.syy is Syy.SADE_LIIAN_PIENI
  assert sert.tarvittava_nu_tahti == pytest.approx(
    2 - math.sqrt(2), abs=1e-10
  )


def test_sivuava_tapaus():
  sert = sertifioi(malli(eta=0.5, l0=1.0))
  assert sert.sertifioitu
  assert sert.reuna is Reuna.SULJETTU
  assert sert.nu_tahti == pytest.approx(1.0, abs=1e-6)
  assert sert.nu_tahti_tahti == sert.nu_tahti
  assert sert.lambda_tahti == sert.nu_tahti


def test_skalaaritermit():
  sert = sertifioi(malli())
  assert sert.skalaaritermit(4) == list(sert.skalaarijono[:4])
  pitka = sert.skalaaritermit(40)
  assert len(pitka) == 40
  assert pitka[:ESIKATSELU] == list(sert.skalaarijono)
  assert pitka[-1] <= sert.nu_tahti + 1e-12
  with pytest.raises(Sertifikaatti.Puuttuu):
    sertifioi(malli(R=0.5)).skalaaritermit(3)


def test_json_edestakaisin(tmp_path):
  sert = sertifioi(malli())
  polku = tmp_path / 'sert.json'
  JsonMuoto().kirjoita(polku, sert)
  data = JsonMuoto().tulkitse_data(polku.read_text(encoding='utf-8'))
  assert data['status'] == 'Certified'
  assert data['reason'] == 'absent'
  assert data['uniqueness_boundary'] == 'Open'
  assert 'malli' not in data

  luettu = JsonMuoto().lue(polku, Sertifikaatti)
  assert luettu == sert
  assert luettu.syy is puuttuu
  assert luettu.reuna is Reuna.AVOIN
  assert luettu.skalaaritermit(3) == list(sert.skalaarijono[:3])
  with pytest.raises(Sertifikaatti.Puuttuu):
    luettu.skalaaritermit(ESIKATSELU + 4)


def test_json_reunalla():
  sert = sertifioi(malli(R=3.0))
  muoto = JsonMuoto()
  luettu = Sertifikaatti.saapuva(
    muoto.tulkitse_data(muoto.muodosta_data(sert.lahteva()))
  )
  assert luettu.nu_tahti_tahti is reunalla
  assert luettu == sert


def test_virheellinen_tila():
  data = sertifioi(malli()).lahteva()
  data['status'] = 'Maybe'
  with pytest.raises(VirheellinenSyote):
    Sertifikaatti.saapuva(data)


def test_tuntematon_skeema():
  with pytest.raises(JsonMuoto.VirheellinenAsiakirja):
    JsonMuoto().tulkitse_data('{"schema": 2, "status": "Certified"}')
  with pytest.raises(JsonMuoto.VirheellinenAsiakirja):
    JsonMuoto().tulkitse_data('[1, 2]')


def test_holder_eta_max():
  assert holder_eta_max(1.0, 1.0, 0.0) == 0.5
  assert holder_eta_max(2.0, 1.0, 0.5) == pytest.approx(0.25 * 0.5 / 2.0)
  assert holder_eta_max(1.0, 0.5, 0.0) == pytest.approx(
    (math.sqrt(1.0 / 3.0)) ** 2
  )
  assert holder_eta_max(0.0, 1.0, 0.0) is rajaton
  with pytest.raises(HolderParametrit.RappeutunutMitta):
    holder_eta_max(0.0, 1.0, 0.0, rajaton_sallittu=False)


def test_kynnys_ruudukolla():
  ''' Lipschitz-tapauksessa ehto on täsmälleen 2·l0·η <= 1. '''
  for eta in np.arange(1, 1001) / 1000:
    p = HolderParametrit(l0=1.0, eta=float(eta))
    assert tarkista_holder_ehto(p) == (eta <= 0.5)
    # for eta in


def test_holder_juuret_suljettu_muoto():
  p = HolderParametrit(l0=0.5, eta=0.5)
  pienin, suurin = holder_juuret(p, 10.0)
  assert pienin == pytest.approx(2 - math.sqrt(2), abs=1e-12)
  assert suurin == pytest.approx(2 + math.sqrt(2), abs=1e-12)
  assert holder_juuret(p, 3.0)[1] is reunalla
  assert holder_juuret(p, 0.5) == (puuttuu, puuttuu)


def test_holder_juuret_vastaavat_puolitusta():
  p = HolderParametrit(l0=0.8, nu=0.1, eta=0.3)
  pienin, suurin = p.juuret(10.0)
  m = p.malli(10.0)
  assert pienin == pytest.approx(m.pienin_juuri(), abs=1e-10)
  assert suurin == pytest.approx(m.suurin_juuri(), abs=1e-10)


def test_holder_juuret_murtoeksponentilla():
  p = HolderParametrit(l0=1.0, alpha=0.5, eta=0.1)
  pienin, suurin = p.juuret(10.0)
  m = p.malli(10.0)
  assert m.g(pienin) == pytest.approx(0.0, abs=1e-10)
  assert m.g(suurin) == pytest.approx(0.0, abs=1e-10)
  assert pienin < suurin


def test_holder_juuret_lineaarinen():
  p = HolderParametrit(l0=0.0, nu=0.5, eta=0.2)
  assert holder_juuret(p, 10.0) == (pytest.approx(0.4), reunalla)


def test_ehto_ei_toteudu():
  p = HolderParametrit(l0=1.0, eta=0.6)
  assert not p.ehto()
  with pytest.raises(HolderParametrit.EhtoEiToteudu):
    p.juuret(10.0)


@pytest.mark.parametrize('kwargs', [
  {'l0': -1.0, 'eta': 0.1},
  {'l0': 1.0, 'alpha': 0.0, 'eta': 0.1},
  {'l0': 1.0, 'nu': 1.0, 'eta': 0.1},
  {'l0': 1.0, 'eta': 0.0},
])
def test_virheelliset_parametrit(kwargs):
  with pytest.raises(HolderParametrit.VirheellisetParametrit):
    HolderParametrit(**kwargs)


def test_sertifiointi_vastaa_holder_ehtoa():
  ''' Sertifioitu, jos ja vain jos Hölder-ehto pätee ja R >= ν*. '''
  rng = np.random.default_rng(5)
  vertailuja = 0
  for _ in range(500):
    alpha = rng.uniform(0.25, 1.0)
    nu = rng.uniform(0.0, 0.9)
    l0 = 10 ** rng.uniform(-1.0, 1.0)
    suhde = rng.uniform(0.05, 1.5)
    if abs(suhde - 1.0) < 1e-6:
      continue
    p = HolderParametrit(
      l0=l0, alpha=alpha, nu=nu, eta=suhde * holder_eta_max(l0, alpha, nu)
    )
    ylitys = p.mitta().ylitys(1.0)
    R = ylitys * 10 ** rng.uniform(-1.5, 0.5)
    odotettu = p.ehto()
    if odotettu:
      nu_tahti = p.malli(ylitys).pienin_juuri()
      if abs(R - nu_tahti) <= 1e-6 * nu_tahti + 1e-11:
        continue
      odotettu = R >= nu_tahti
    assert sertifioi(p.malli(R)).sertifioitu == odotettu
    vertailuja += 1
    # for _ in range
  assert vertailuja >= 450


@pytest.mark.parametrize('alpha', [0.25, 0.5, 1.0])
@pytest.mark.parametrize('nu', [0.0, 0.5])
def test_juuret_monotonisia_etan_suhteen(alpha, nu):
  ''' ν* kasvaa ja λ* pienenee η:n kasvaessa. '''
  eta_max = holder_eta_max(1.0, alpha, nu)
  sertit = [
    sertifioi(malli(eta=eta, l0=1.0, alpha=alpha, nu=nu))
    for eta in np.linspace(0.01, 0.99, 50) * eta_max
  ]
  assert all(sert.sertifioitu for sert in sertit)
  nu_tahdet = np.array([sert.nu_tahti for sert in sertit])
  lambdat = np.array([sert.lambda_tahti for sert in sertit])
  assert np.all(np.diff(nu_tahdet) >= -1e-12)
  assert np.all(np.diff(lambdat) <= 1e-12)


@pytest.mark.parametrize('alpha', [0.5, 1.0])
@pytest.mark.parametrize('nu', [0.0, 0.25, 0.6])
@pytest.mark.parametrize('eta', [0.1, 0.3])
def test_rappeutuva_mitta(alpha, nu, eta):
  ''' l0 -> 0: ν* -> η / (1 - ν). '''
  sert = sertifioi(malli(eta=eta, l0=1e-12, alpha=alpha, nu=nu))
  assert sert.sertifioitu
  assert sert.nu_tahti == pytest.approx(eta / (1.0 - nu), abs=1e-8)
  pienin, _ = holder_juuret(
    HolderParametrit(l0=1e-12, alpha=alpha, nu=nu, eta=eta), 10.0
  )
  assert pienin == pytest.approx(eta / (1.0 - nu), abs=1e-8)
