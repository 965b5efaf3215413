class LatticeError(Exception):
    """Kauffman states do not form a graded lattice under the configured orientation"""
    pass
