# pylint: disable=unused-import

from .json import JsonMuoto
from .majorantti import (
  HolderMitta,
  MajoranttiMalli,
  Mitta,
  TaulukoituMitta,
  Tapaus,
  yhdista_mitat,
)
from .normit import Normi
from .ratkaisija import (
  Iteraatiojalki,
  Pysahtyminen,
  Ratkaisija,
  Tapa,
  Tehtava,
  arvioi_omega,
  sertifioi_arvioiduilla,
  tarkista_lipschitz,
  tarkista_majorointi,
)
from .sanoma import Sanoma
from .sertifikaatti import (
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
from .tehtavat import Analyyttinen, TehtavaKuvaus
from .tyokalut import (
  LaskentaVirhe,
  Poikkeus,
  Valinnainen,
  VirheellinenSyote,
  ei_sovellettavissa,
  ei_syotetty,
  puuttuu,
  rajaton,
  reunalla,
)
from .vertailu import (
  ahues_ehto,
  ahues_f,
  ahues_juuret,
  kantorovich_ehto,
  kiintopisteehto,
  vertaa,
)
