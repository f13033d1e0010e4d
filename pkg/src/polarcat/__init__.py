"""Polar codes with successive-cancellation decoding and serial concatenation."""

from . import channel, concat, construction, core, decoder, sim
from .channel import *
from .concat import *
from .construction import *
from .core import *
from .decoder import *
from .sim import *

__all__ = (core.__all__ + construction.__all__ + decoder.__all__ + concat.__all__
           + channel.__all__ + sim.__all__)

__version__ = "0.1.0"
