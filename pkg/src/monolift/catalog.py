"""Named monomial ideals used throughout the tests, scripts and CLI."""

from .monomial import parse_ideal

# three cubics whose Taylor resolution is already minimal (Betti 3, 3, 1)
TRIANGLE_IDEAL = "x1^2*x2, x2^2*x3, x3^2*x1"

# (x1, x2)^2 meets (x1, x2, x3)^3: three lines through a point plus three embedded points
LINES_THROUGH_POINT_IDEAL = "x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3, x2^3, x2^2*x3"

# Artinian, h-vector (1,3,6,9,1); the degree-4 lex segment minus x1^2*x3^2
ALMOST_LEX_IDEAL = (
    "x1^3, x1^2*x2^2, x1^2*x2*x3, x1*x2^3, x1*x2^2*x3, x1*x2*x3^2, "
    "x1*x3^3, x2^4, x2^3*x3, x2^2*x3^2, x2*x3^3, x3^4"
)

# Artinian, h-vector (1,3,6,4); degree 3 skips x1*x3^2
DEGREE_THREE_GAP_IDEAL = "x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3, x2^3, x1*x3^3, x2^2*x3^2, x2*x3^3, x3^4"

# saturation is (x1, x2); lifts to a line and two points
LINE_AND_TWO_POINTS_IDEAL = "x1^2, x1*x2, x1*x3, x2^2, x2*x3"

# two skew lines in four variables; lifts to two planes meeting in a point
TWO_SKEW_LINES_IDEAL = "x1*x3, x1*x4, x2*x3, x2*x4"

NAMED_IDEALS = {
    "triangle": (TRIANGLE_IDEAL, 3),
    "lines-through-point": (LINES_THROUGH_POINT_IDEAL, 3),
    "almost-lex": (ALMOST_LEX_IDEAL, 3),
    "degree-three-gap": (DEGREE_THREE_GAP_IDEAL, 3),
    "line-and-two-points": (LINE_AND_TWO_POINTS_IDEAL, 3),
    "two-skew-lines": (TWO_SKEW_LINES_IDEAL, 4),
}


def named_ideal(name):
    text, n = NAMED_IDEALS[name]
    return parse_ideal(text, n)
