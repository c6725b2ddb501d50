class OutOfRange(ValueError):
    """Well-formed input that lies outside the domain (outside the cone, inactive wall, n over the cap)."""
