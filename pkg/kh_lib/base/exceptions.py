from enum import IntEnum


class KhovanovError(Exception):
    """Base exception class for all errors raised by kh-lib.

    This is the parent exception for every error that occurs while parsing
    diagrams, building cables, assembling chain complexes or computing
    homology. Catch this exception to handle any library error generically,
    or catch one of the three families below for targeted error handling:

    - DiagramError: the input is malformed or violates a precondition
    - ResourceLimitError: a configured cap or budget was exceeded
    - InvariantViolation: a mathematical invariant failed, i.e. a bug

    Example:
        >>> try:
        ...     diagram = parse_pd("X[1,2,3]")
        ... except KhovanovError as e:
        ...     print(f"kh-lib error occurred: {e}")
    """

    pass


class DiagramError(KhovanovError):
    """Input diagram is malformed or does not satisfy a precondition.

    Parent of all parse and precondition errors. The command line front end
    maps every error of this family to exit code 2.
    """

    pass


class PDSyntaxError(DiagramError):
    """A PD code token could not be parsed.

    Raised for tokens that match none of ``X[a,b,c,d]``, ``U<k>`` or
    ``*<edge>``, for non-positive edge labels and for empty input.

    Example:
        ``"X[1,2,3]"`` has only three edge slots.
    """

    pass


class EdgeMultiplicityError(DiagramError):
    """An edge label does not appear exactly twice across all crossings.

    Every edge of a PD code joins two crossing slots. An edge that appears
    once or three times cannot be part of a closed link diagram.
    """

    pass


class OrientationError(DiagramError):
    """Strand orientations could not be propagated consistently.

    Raised when orientation propagation forces an edge to be outgoing (or
    incoming) at both of its ends, which happens for codes that do not list
    the incoming under-strand first.
    """

    pass


class UnknownEdgeError(DiagramError):
    """The referenced edge identifier does not exist in the diagram.

    Example:
        Setting the basepoint on edge 99 of a four-edge Hopf link diagram.
    """

    pass


class MissingBasepointError(DiagramError):
    """Reduced homology was requested for a diagram without a basepoint."""

    pass


class NotAKnotError(DiagramError):
    """An operation that is defined for knots only received a link.

    Cabling and unknot detection accept one-component diagrams only.
    """

    pass


class ResolutionError(DiagramError):
    """A resolution request does not match the diagram.

    Raised when a choice vector has the wrong length or when an edge map is
    requested for two states that are not adjacent in the cube.
    """

    pass


class InsertionLocusError(DiagramError):
    """No bundle of parallel strands is available for twist insertion.

    Full twists are inserted on the parallel copies of one edge recorded by
    the blackboard cable. Diagrams without that record, or with a record of
    the wrong width, raise this error.
    """

    pass


class KnotTableError(DiagramError):
    """A knot table line is malformed.

    The message names the offending line number of the JSON-lines file.
    """

    pass


class ResourceLimitError(KhovanovError):
    """A configured resource cap was exceeded.

    Parent of all resource errors. The command line front end maps every
    error of this family to exit code 3. A computation that hits a cap never
    produces a partial or guessed result.
    """

    pass


class CrossingCapExceeded(ResourceLimitError):
    """The diagram has more crossings than the requested path allows.

    The dense cube and the Kauffman bracket oracle enumerate all resolution
    states and refuse diagrams above their crossing caps.
    """

    pass


class GeneratorBudgetExceeded(ResourceLimitError):
    """The number of intermediate generators exceeded the configured budget."""

    pass


class MemoryBudgetExceeded(ResourceLimitError):
    """The resident memory of the process exceeded the configured budget."""

    pass


class InvariantViolation(KhovanovError):
    """A mathematical invariant failed during a computation.

    Every error of this family indicates an implementation bug rather than
    bad input. The command line front end maps it to exit code 4.
    """

    pass


class GradingError(InvariantViolation):
    """A boundary map or morphism does not respect the bigrading."""

    pass


class BoundarySquareError(InvariantViolation):
    """Two consecutive boundary maps do not compose to zero."""

    pass


class TheoremViolation(InvariantViolation):
    """An observed 2-cable rank lies in the forbidden gap.

    Unreduced ranks of Seifert-framed 2-cables over Z/2 are either 4 (the
    unknot) or an even number of at least 12. Any other value is raised as
    this error.
    """

    pass


class ExitCode(IntEnum):
    """Process exit codes with exception class mapping.

    This enum defines the outcome classes reported by the ``kh-lib`` command
    line front end. Each non-zero code corresponds to one exception family;
    :meth:`for_exception` maps a raised error to its code.

    Attributes:
        OK (int): Computation finished and all checks passed (code 0)
        DIAGRAM_ERROR (int): Parse error or violated precondition (code 2)
        RESOURCE_LIMIT (int): A resource cap was exceeded (code 3)
        INVARIANT_VIOLATION (int): Internal invariant or theorem violation (code 4)

    Example:
        >>> ExitCode.for_exception(PDSyntaxError("bad token"))
        <ExitCode.DIAGRAM_ERROR: 2>
    """
    OK = 0
    DIAGRAM_ERROR = 2
    RESOURCE_LIMIT = 3
    INVARIANT_VIOLATION = 4

    @classmethod
    def for_exception(cls, error: BaseException) -> 'ExitCode':
        """
        Returns the exit code for an exception raised by the library.

        Args:
            error (BaseException): The exception to classify.

        Returns:
            ExitCode: DIAGRAM_ERROR, RESOURCE_LIMIT or INVARIANT_VIOLATION.
            Exceptions from outside the library count as invariant violations.
        """
        if isinstance(error, DiagramError):
            return cls.DIAGRAM_ERROR
        if isinstance(error, ResourceLimitError):
            return cls.RESOURCE_LIMIT
        return cls.INVARIANT_VIOLATION
