"""
The h-series h'''(u) = (1/2) tan(-u/2) and the tangent expansions it is
built from.

"""
