NOT = "not"
AND = "and"
OR = "or"
IFF = "iff"
EQ = "eq"
TRUE = "true"
FALSE = "false"

# name -> (symbol, precedence, arity)
INFIX = {
    AND: ("∧", 35, 2),
    OR: ("∨", 30, 2),
    IFF: ("↔", 20, 2),
}
PREFIX = {
    NOT: ("¬", 40, 1),
}
EQ_PRECEDENCE = 50
ARROW_PRECEDENCE = 25
APP_PRECEDENCE = 1024
ATOM_PRECEDENCE = 2000
BINDER_PRECEDENCE = 0

LAMBDA_KEYWORDS = ("λ", "fun")
PI_KEYWORDS = ("∀", "Π", "forall")
