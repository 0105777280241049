"""
geo5: classification of 5-dimensional solvable Lie algebras into model
geometries, with the atlas of 5-dimensional maximal model geometries.
"""

__version__ = "0.1.0"
