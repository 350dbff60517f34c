"""
Closed-form generating functions, declared as h-term tables in
`prototypes.py`, expanded by `builders.py` and read into integral
tables by `table.py`.

"""
