"""
blobcell: exact-arithmetic tools for type-B Weyl group combinatorics,
unequal-parameter Kazhdan-Lusztig cells, the blob algebra and level-2 Fock
spaces.
"""

__version__ = "0.1.0"
