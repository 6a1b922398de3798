ORACLE_VERTEX_LIMIT = 13
SOLVER_VERTEX_SOFT_LIMIT = 30
NODE_LIMIT = 2_000_000
DECIMAL_DIGITS = 6
