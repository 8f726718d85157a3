"""DiffAlgebra - motor de álgebra diferencial"""

__version__ = "1.0.0"
