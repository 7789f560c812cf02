"""Exception types shared across the package."""


class DegenerateParametersError(ValueError):
    """Two thinning probabilities collide within the separation tolerance.

    Coinciding alpha entries push an eigenvalue of the characteristic matrix
    onto a pole of the parameter matrix, so the general polynomial family
    does not exist; the instance is rejected rather than silently mangled.
    """


class NonGenericSpectrumError(RuntimeError):
    """The characteristic matrix has a complex or degenerate spectrum.

    A reversible chain has a real spectrum, so this signals inadmissible
    input or a numerical breakdown, never something to patch over.
    """


class SingularUError(RuntimeError):
    """An eigenvalue falls within tolerance of a pole lambda = alpha_i."""
