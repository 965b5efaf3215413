class DiagramError(Exception):
    """Base class for invalid link diagrams"""
    pass


class ParseError(DiagramError):
    """Malformed PD code or diagram document"""
    pass


class PlanarityError(DiagramError):
    """Rotation data does not describe a connected planar map"""
    pass


class CurlError(DiagramError):
    """A segment joins a crossing to itself"""
    pass


class OrientationError(DiagramError):
    """Segment orientations are not consistent along a component"""
    pass


class StaleSiteError(DiagramError):
    """A bigon or triangle site no longer matches the diagram"""
    pass
