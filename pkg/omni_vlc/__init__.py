"""omni-vlc: Omnidirectional precoding for MIMO visible light communication."""

__version__ = "0.1.0"
