import sys

from .komentorivi import paaohjelma


sys.exit(paaohjelma())
