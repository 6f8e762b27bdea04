"""
Aliases accepted for lattice geometries on the command line
"""

space_map = {
    "free": "free",
    "flat": "free",
    "torus": "torus",
    "periodic": "torus",
    "klein": "klein",
    "klein-bottle": "klein",
    "desitter": "desitter",
    "de-sitter": "desitter",
    "tropical-desitter": "desitter",
}
