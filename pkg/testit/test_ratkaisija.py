import logging
import math

import numpy as np
import numpy.testing as npt
import pytest

from vakiokulma.majorantti import HolderMitta, MajoranttiMalli
from vakiokulma.normit import Normi
from vakiokulma.ratkaisija import (
  Pysahtyminen,
  Ratkaisija,
  Tapa,
  Tehtava,
  arvioi_omega,
  sertifioi_arvioiduilla,
  tarkista_lipschitz,
  tarkista_majorointi,
)
from vakiokulma.sertifikaatti import Sertifikaatti, sertifioi
from vakiokulma.tehtavat import TehtavaKuvaus
from vakiokulma.tyokalut import VirheellinenSyote, ei_syotetty, puuttuu


def rakenna(nimi, R=ei_syotetty, normi=Normi.MAKSIMI, **parametrit):
  return TehtavaKuvaus(
    nimi=nimi, parametrit=parametrit, normi=normi, R=R
  ).rakenna()


def sertifikaatti(tehtava, analyyttinen):
  return sertifioi(MajoranttiMalli(
    eta=analyyttinen.eta, R=tehtava.R, omega=analyyttinen.mitta()
  ))


def test_yksi_askel():
  tehtava, _ = rakenna('scalar_quadratic')
  npt.assert_allclose(tehtava.askel(np.array([2.0])), [1.5])
  assert tehtava.eta() == 0.5
  assert tehtava.nu() == 0.0


def test_neliollinen_suppenee_sertifikaatilla():
  tehtava, analyyttinen = rakenna('scalar_quadratic')
  sert = sertifikaatti(tehtava, analyyttinen)
  x, jalki = Ratkaisija().ratkaise(tehtava, sert)
  assert jalki.suppeni
  assert x[0] == pytest.approx(math.sqrt(2), abs=1e-10)
  assert tehtava.etaisyys(x) == pytest.approx(sert.nu_tahti, abs=1e-9)
  assert all(tehtava.etaisyys(x) <= sert.nu_tahti + 1e-9
             for x in jalki.iteraatit)
  assert len(jalki.jaannokset) == jalki.askelia + 1
  assert len(jalki.skalaariaskeleet) == jalki.askelia
  assert len(jalki.virherajat) == jalki.askelia + 1

  raportti = tarkista_majorointi(jalki, sert)
  assert raportti.lapaisty
  assert raportti.pahin_marginaali >= -1e-9
  assert len(raportti.askelmarginaalit) == jalki.askelia
  assert len(raportti.hantamarginaalit) == jalki.askelia + 1


def test_jaljen_rivit():
  tehtava, analyyttinen = rakenna('scalar_quadratic')
  _, jalki = Ratkaisija().ratkaise(
    tehtava, sertifikaatti(tehtava, analyyttinen)
  )
  rivit = list(jalki.rivit())
  assert len(rivit) == jalki.askelia + 1
  k, askel, jaannos, v_askel, marginaali, virheraja = rivit[0]
  assert (k, askel, jaannos, v_askel) == (0, 0.5, 2.0, 0.5)
  assert marginaali == pytest.approx(0.0, abs=1e-15)
  assert virheraja == pytest.approx(2 - math.sqrt(2), abs=1e-10)
  assert rivit[-1][1] is None
  assert rivit[-1][3] is None

  _, ilman = Ratkaisija().ratkaise(tehtava)
  assert ilman.skalaariaskeleet is ei_syotetty
  assert list(ilman.rivit())[0][3:] == (None, None, None)


def test_sivuava_tehtava_suppenee():
  tehtava, analyyttinen = rakenna('scalar_quadratic', c=2.0, x0=1.0, b=0.5)
  sert = sertifikaatti(tehtava, analyyttinen)
  assert sert.sertifioitu
  x, jalki = Ratkaisija().ratkaise(tehtava, sert)
  assert jalki.suppeni
  assert x[0] == pytest.approx(math.sqrt(2), abs=1e-10)


def test_lineaarinen_yhdella_askeleella():
  tehtava, analyyttinen = rakenna('linear')
  x, jalki = Ratkaisija().ratkaise(tehtava)
  assert jalki.askelia == 1
  assert jalki.syy is Pysahtyminen.JAANNOS
  assert jalki.jaannokset[-1] <= 1e-12
  npt.assert_allclose(x, analyyttinen.ratkaisu, atol=1e-12)


def test_poistuu_pallosta():
  tehtava, _ = rakenna('scalar_quadratic', R=0.1)
  x, jalki = Ratkaisija().ratkaise(tehtava)
  assert jalki.syy is Pysahtyminen.POISTUI
  assert jalki.askelia == 0
  assert not jalki.suppeni
  npt.assert_array_equal(x, [2.0])


def test_askelraja():
  tehtava, _ = rakenna('scalar_quadratic')
  _, jalki = Ratkaisija(max_iter=3).ratkaise(tehtava)
  assert jalki.syy is Pysahtyminen.MAKSIMI
  assert jalki.askelia == 3
  assert len(jalki.jaannokset) == 4


def test_arviointi_epaonnistuu():
  tehtava = Tehtava(
    F=lambda x: np.log(x - 3.0), B=[[1.0]], x0=[2.0], R=1.0
  )
  with pytest.raises(Tehtava.ArviointiEpaonnistui):
    Ratkaisija().ratkaise(tehtava)


def test_virheellinen_tehtava():
  with pytest.raises(Tehtava.VirheellinenTehtava):
    Tehtava(F=lambda x: x, B=np.eye(2), x0=[1.0], R=1.0)
  with pytest.raises(Tehtava.VirheellinenTehtava):
    Tehtava(F=lambda x: x, B=[[1.0]], x0=[1.0], R=0.0)
  with pytest.raises(Ratkaisija.VirheellisetAsetukset):
    Ratkaisija(tol_askel=0.0)


def test_ratkaisu_vaatii_voimassa_olevan_sertifikaatin():
  tehtava, analyyttinen = rakenna('scalar_quadratic', R=0.5)
  sert = sertifikaatti(tehtava, analyyttinen)
  assert not sert.sertifioitu
  with pytest.raises(Sertifikaatti.Puuttuu):
    Ratkaisija().ratkaise(tehtava, sert)
  with pytest.raises(Sertifikaatti.Puuttuu):
    tarkista_majorointi(Ratkaisija().ratkaise(tehtava)[1], sert)


def test_majorointi_ilman_askelia():
  sert = sertifikaatti(*rakenna('scalar_quadratic'))
  _, jalki = Ratkaisija().ratkaise(rakenna('scalar_quadratic', R=0.1)[0])
  assert jalki.askelia == 0
  with pytest.raises(VirheellinenSyote):
    tarkista_majorointi(jalki, sert)


def test_mittaus_ja_edistyminen():
  mitatut, edistyminen = [], []

  def kahva(self, *, k, askel, jaannos):
    assert isinstance(self, Ratkaisija)
    edistyminen.append((k, askel, jaannos))

  ratkaisija = Ratkaisija(
    mittaa_laskenta=lambda f, args, kesto: mitatut.append(f.__name__),
    iteraation_edistyminen=kahva,
  )
  _, jalki = ratkaisija.ratkaise(rakenna('scalar_quadratic')[0])
  assert mitatut == ['ratkaise']
  assert [k for k, _, _ in edistyminen] == list(range(1, jalki.askelia + 1))
  assert edistyminen[0][1] == 0.5


def test_edistymisen_kirjaus(caplog):
  tehtava, _ = rakenna('scalar_quadratic')
  with caplog.at_level(logging.INFO, logger='vakiokulma.ratkaisija'):
    Ratkaisija(tulosta_edistyminen=True, raportointivali=1).ratkaise(tehtava)
  assert any('Iteraatio 1:' in r.getMessage() for r in caplog.records)


def test_yksikasitteisyyskoe():
  tehtava, analyyttinen = rakenna('scalar_quadratic')
  sert = sertifikaatti(tehtava, analyyttinen)
  raportti = Ratkaisija().yksikasitteisyyskoe(tehtava, sert, lukumaara=100)
  assert raportti.lapaisty
  assert len(raportti.lahtopisteet) == 100
  npt.assert_array_equal(raportti.lahtopisteet[0], tehtava.x0)
  assert all(virhe is None for virhe in raportti.virheet)
  assert raportti.suurin_etaisyys <= 1e-8
  for x in raportti.lahtopisteet[1:]:
    assert tehtava.etaisyys(x) < sert.lambda_tahti


def test_suora_arvio_neliollinen():
  tehtava, _ = rakenna('scalar_quadratic')
  omega = arvioi_omega(tehtava, Tapa.SUORA)
  assert omega.solmut[0] == (0.0, 0.0)
  for v, arvo in omega.solmut[1:]:
    assert arvo == pytest.approx(0.5 * v, rel=1e-12)


def test_suora_arvio_lineaarinen():
  tehtava, _ = rakenna('linear')
  omega = arvioi_omega(tehtava, sateet=[1.0, 2.0], naytteita=8)
  npt.assert_allclose([y for _, y in omega.solmut], 0.0, atol=1e-12)


def test_suora_arvio_ei_supistava():
  tehtava, _ = rakenna('scalar_quadratic', b=1.0)
  with pytest.raises(MajoranttiMalli.EiSupistava):
    arvioi_omega(tehtava)


def test_arvio_vaatii_jacobiaanin():
  tehtava = Tehtava(F=lambda x: x - 1.0, B=[[1.0]], x0=[0.0], R=1.0)
  with pytest.raises(Tehtava.JacobiaaniPuuttuu):
    arvioi_omega(tehtava)


def test_arvion_sateet():
  tehtava, _ = rakenna('scalar_quadratic')
  with pytest.raises(VirheellinenSyote):
    arvioi_omega(tehtava, sateet=[0.0, 1.0])
  with pytest.raises(VirheellinenSyote):
    arvioi_omega(tehtava, sateet=[1.0, 20.0])
  with pytest.raises(VirheellinenSyote):
    arvioi_omega(tehtava, sateet=[2.0, 1.0])


def test_keskitetty_arvio_holder():
  tehtava, _ = rakenna('scalar_holder', x0=0.0)
  omega = arvioi_omega(tehtava, Tapa.KESKITETTY, sateet=[0.1, 0.4, 0.9])
  assert omega.solmut[0] == (0.0, 0.0)
  for v, arvo in omega.solmut[1:]:
    assert arvo == pytest.approx(math.sqrt(v), rel=1e-12)


def test_keskitetty_arvio_poly2d():
  tehtava, analyyttinen = rakenna('poly2d')
  omega = arvioi_omega(tehtava, Tapa.KESKITETTY, sateet=[0.25, 0.5, 1.0])
  for v, arvo in omega.solmut[1:]:
    assert arvo <= analyyttinen.l0 * v * (1 + 1e-12)
    assert arvo == pytest.approx(analyyttinen.l0 * v, rel=0.02)


def test_sertifiointi_arvioidulla_mitalla():
  tehtava, analyyttinen = rakenna('poly2d')
  analyyttinen_sert = sertifikaatti(tehtava, analyyttinen)
  arvioitu = sertifioi_arvioiduilla(tehtava)
  assert analyyttinen_sert.sertifioitu
  assert arvioitu.sertifioitu
  assert arvioitu.nu_tahti <= analyyttinen_sert.nu_tahti + 1e-12
  assert arvioitu.nu_tahti == pytest.approx(
    analyyttinen_sert.nu_tahti, rel=0.02
  )


def test_lipschitz_tarkistus():
  tehtava, _ = rakenna('scalar_quadratic')
  raportti = tarkista_lipschitz(
    tehtava, HolderMitta(l0=0.5), sateet=[0.5, 1.0, 2.0]
  )
  assert raportti.lapaisty
  assert raportti.rajat == (0.25, 0.5, 1.0)
  assert all(0 < s <= r for s, r in zip(raportti.suhteet, raportti.rajat))

  liian_pieni = tarkista_lipschitz(
    tehtava, HolderMitta(l0=0.1), sateet=[2.0]
  )
  assert not liian_pieni.lapaisty


def test_chandrasekhar_sertifioitu():
  tehtava, analyyttinen = rakenna('chandrasekhar', c=0.5)
  sert = sertifikaatti(tehtava, analyyttinen)
  assert sert.sertifioitu
  x, jalki = Ratkaisija().ratkaise(tehtava, sert)
  assert jalki.suppeni
  assert np.all(x >= 1.0)
  assert tarkista_majorointi(jalki, sert).lapaisty


def test_chandrasekhar_suppenee_ilman_sertifikaattia():
  tehtava, _ = rakenna('chandrasekhar', c=0.9, R=5.0)
  x, jalki = Ratkaisija().ratkaise(tehtava)
  assert jalki.suppeni
  assert Normi.MAKSIMI.vektori(tehtava.arvo(x)) <= 1e-10


def test_ei_analyyttisia_vakioita_kakkosnormilla():
  _, analyyttinen = rakenna('poly2d', normi=Normi.KAKSI)
  assert analyyttinen is puuttuu


@pytest.mark.parametrize('nimi,parametrit', [
  ('scalar_quadratic', {}),
  ('scalar_holder', {}),
  ('poly2d', {}),
  ('poly2d', {'x0': (0.9, 2.2)}),
  ('chandrasekhar', {}),
  ('linear', {'x0': (1.0, -1.0)}),
])
def test_sertifioidut_tehtavat_majoroituvat(nimi, parametrit):
  tehtava, analyyttinen = rakenna(nimi, **parametrit)
  sert = sertifikaatti(tehtava, analyyttinen)
  assert sert.sertifioitu
  x, jalki = Ratkaisija().ratkaise(tehtava, sert)
  assert jalki.suppeni
  assert all(
    tehtava.etaisyys(x) <= sert.nu_tahti + 1e-9 for x in jalki.iteraatit
  )
  if jalki.askelia:
    assert tarkista_majorointi(jalki, sert).lapaisty
  if analyyttinen.ratkaisu is not puuttuu:
    npt.assert_allclose(x, analyyttinen.ratkaisu, atol=1e-10)


def test_arvioitu_ja_analyyttinen_sertifiointi_samaa_mielta():
  ''' Tila täsmää, kun analyyttinen tulos kestää 2 % muutoksen l0:ssa. '''
  vertailuja = 0
  for t in np.linspace(-0.5, 1.5, 21):
    tehtava, analyyttinen = rakenna('poly2d', x0=(1.0 + t, 2.0 + t))
    tilat = {
      sertifioi(MajoranttiMalli(
        eta=analyyttinen.eta,
        R=tehtava.R,
        omega=HolderMitta(l0=kerroin * analyyttinen.l0, nu=analyyttinen.nu),
      )).tila
      for kerroin in (0.98, 1.0, 1.02)
    }
    if len(tilat) > 1:
      continue
    vertailuja += 1
    assert sertifioi_arvioiduilla(tehtava).tila in tilat
    # for t in
  assert vertailuja >= 10


def test_chandrasekhar_sertifioitu_arvioiduilla_mitoilla():
  tehtava, analyyttinen = rakenna(
    'chandrasekhar', R=10.0, normi=Normi.YKSI, c=0.9, n=16
  )
  assert analyyttinen is puuttuu
  sert = sertifioi_arvioiduilla(tehtava)
  assert sert.sertifioitu
  x, jalki = Ratkaisija().ratkaise(tehtava, sert)
  assert jalki.suppeni
  assert Normi.YKSI.vektori(tehtava.arvo(x)) <= 1e-10
  assert all(
    tehtava.etaisyys(x) <= sert.nu_tahti + 1e-9 for x in jalki.iteraatit
  )
  assert tarkista_majorointi(jalki, sert).lapaisty


def test_keskitetty_arvio_kattaa_lavistajan():
  tehtava, _ = rakenna('chandrasekhar', normi=Normi.KAKSI, c=0.9, n=16)
  suunta = np.ones(16) / 4.0
  omega = arvioi_omega(tehtava, Tapa.KESKITETTY, sateet=[0.5, 1.0])
  for v, arvo in omega.solmut[1:]:
    lavistaja = Normi.KAKSI.matriisi(
      tehtava.B @ tehtava.derivaatta(tehtava.x0 + v * suunta)
      - tehtava.B @ tehtava.derivaatta(tehtava.x0)
    )
    assert arvo >= lavistaja


def test_yksikasitteisyyskoe_sivuavassa_tapauksessa():
  tehtava, analyyttinen = rakenna('scalar_quadratic', c=2.0, x0=1.0, b=0.5)
  sert = sertifikaatti(tehtava, analyyttinen)
  assert sert.lambda_tahti == sert.nu_tahti
  raportti = Ratkaisija().yksikasitteisyyskoe(tehtava, sert, lukumaara=50)
  assert raportti.lapaisty
  for x in raportti.rajat:
    assert x[0] == pytest.approx(math.sqrt(2), abs=1e-10)
