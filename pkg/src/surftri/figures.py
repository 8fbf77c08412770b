"""Vertex positions and drawn segments of the catalog pictures.

Coordinates are figure units. Segments are ``(x0, y0, x1, y1)`` and may run
through several vertices. The caption degree sequences are kept alongside.
"""

FIGURES = {
    "Kh1": {
        "degrees": (7, 7, 6, 6, 6, 6, 5, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (15, 10, 30, 0),
            (0, 10, 10, 20),
            (10, 20, 15, 10),
            (15, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 30, 10, 20),
            (10, 20, 10, 30),
            (10, 30, 20, 20),
            (20, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh2": {
        "degrees": (7, 7, 7, 6, 6, 5, 5, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (15, 10, 30, 0),
            (0, 10, 10, 20),
            (10, 20, 15, 10),
            (15, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 30, 10, 20),
            (10, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh3": {
        "degrees": (7, 7, 7, 7, 5, 5, 5, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (15, 10, 30, 0),
            (0, 10, 10, 20),
            (10, 20, 15, 10),
            (15, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (0, 20, 20, 30),
            (10, 20, 20, 30),
            (20, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh4": {
        "degrees": (7, 6, 6, 6, 6, 6, 6, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 10, 10, 20),
            (10, 20, 15, 10),
            (15, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 20, 20, 30),
            (20, 20, 30, 30),
        ),
    },
    "Kh5": {
        "degrees": (7, 7, 7, 6, 6, 5, 5, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 10, 10, 20),
            (10, 20, 15, 10),
            (15, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 30, 10, 20),
            (10, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh6": {
        "degrees": (7, 7, 7, 6, 6, 6, 5, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 10, 10, 20),
            (10, 20, 15, 10),
            (15, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh7": {
        "degrees": (8, 8, 8, 6, 6, 5, 5, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (7.5, 15), (22.5, 15), (0, 20), (15, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (15, 10, 30, 0),
            (0, 10, 15, 20),
            (0, 20, 15, 10),
            (15, 10, 15, 20),
            (15, 10, 30, 20),
            (15, 20, 30, 10),
            (0, 30, 15, 20),
            (10, 30, 15, 20),
            (15, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh8": {
        "degrees": (8, 8, 7, 7, 6, 5, 5, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (7.5, 15), (22.5, 15), (0, 20), (15, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 10, 15, 20),
            (0, 20, 15, 10),
            (15, 10, 15, 20),
            (15, 10, 30, 20),
            (15, 20, 30, 10),
            (0, 30, 15, 20),
            (10, 30, 15, 20),
            (15, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh9": {
        "degrees": (8, 8, 7, 7, 6, 6, 4, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (7.5, 15), (22.5, 15), (0, 20), (15, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 10, 15, 20),
            (0, 20, 15, 10),
            (15, 10, 15, 20),
            (15, 10, 30, 20),
            (15, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 15, 20),
            (15, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh10": {
        "degrees": (8, 7, 7, 6, 6, 5, 5, 5, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (7.5, 15), (22.5, 15), (0, 20), (15, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (15, 10, 30, 0),
            (0, 10, 15, 20),
            (0, 20, 15, 10),
            (7.5, 15, 22.5, 15),
            (15, 10, 30, 20),
            (15, 20, 30, 10),
            (0, 30, 15, 20),
            (10, 30, 15, 20),
            (15, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh11": {
        "degrees": (8, 8, 6, 6, 6, 5, 5, 5, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (7.5, 15), (22.5, 15), (0, 20), (15, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 15, 10),
            (15, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 10, 15, 20),
            (0, 20, 15, 10),
            (7.5, 15, 22.5, 15),
            (15, 10, 30, 20),
            (15, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 15, 20),
            (15, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh12": {
        "degrees": (8, 8, 8, 6, 6, 5, 5, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 0, 10, 10),
            (10, 0, 10, 10),
            (10, 10, 20, 0),
            (20, 0, 20, 10),
            (20, 10, 30, 0),
            (0, 20, 10, 10),
            (10, 10, 10, 20),
            (10, 10, 20, 20),
            (20, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (0, 20, 20, 30),
            (10, 20, 20, 30),
            (20, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh13": {
        "degrees": (8, 8, 7, 7, 7, 5, 4, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 0, 10, 10),
            (10, 0, 10, 10),
            (10, 10, 20, 0),
            (20, 0, 20, 10),
            (20, 10, 30, 0),
            (0, 20, 10, 10),
            (10, 10, 10, 20),
            (10, 10, 20, 20),
            (20, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (0, 20, 20, 30),
            (10, 20, 20, 30),
            (20, 20, 20, 30),
            (20, 20, 30, 30),
        ),
    },
    "Kh14": {
        "degrees": (6, 6, 6, 6, 6, 6, 6, 6, 6),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 0, 10, 10),
            (10, 0, 20, 10),
            (20, 0, 30, 10),
            (0, 10, 10, 20),
            (10, 10, 20, 20),
            (20, 10, 30, 20),
            (0, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 20, 30, 30),
        ),
    },
    "Kh15": {
        "degrees": (8, 7, 7, 6, 6, 6, 5, 5, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 20, 10),
            (20, 0, 30, 10),
            (0, 10, 10, 20),
            (10, 10, 20, 20),
            (20, 10, 30, 20),
            (0, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh16": {
        "degrees": (8, 8, 8, 6, 6, 6, 4, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 0, 10, 10),
            (10, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 20, 20),
            (20, 20, 30, 30),
        ),
    },
    "Kh17": {
        "degrees": (8, 7, 7, 7, 7, 6, 4, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 20, 20),
            (20, 30, 30, 20),
        ),
    },
    "Kh18": {
        "degrees": (8, 8, 7, 7, 6, 5, 5, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 0, 10, 10),
            (10, 10, 20, 0),
            (20, 0, 30, 10),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 20, 20),
            (20, 30, 30, 20),
        ),
    },
    "Kh19": {
        "degrees": (8, 8, 7, 6, 6, 6, 5, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 20, 10),
            (20, 10, 30, 0),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 20, 20),
            (20, 20, 30, 30),
        ),
    },
    "Kh20": {
        "degrees": (8, 8, 8, 6, 5, 5, 5, 5, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 0, 20, 10),
            (20, 0, 30, 10),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 20, 20),
            (20, 20, 30, 30),
        ),
    },
    "Kh21": {
        "degrees": (8, 7, 7, 7, 6, 5, 5, 5, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 10, 20, 0),
            (20, 10, 30, 0),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 30, 20, 20),
            (20, 20, 30, 30),
        ),
    },
    "Kh22": {
        "degrees": (8, 7, 7, 6, 6, 5, 5, 5, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 0, 10, 10),
            (10, 0, 20, 10),
            (20, 0, 30, 10),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 30, 30, 20),
        ),
    },
    "Kh23": {
        "degrees": (7, 7, 7, 6, 6, 6, 5, 5, 5),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 10, 10, 0),
            (10, 10, 20, 0),
            (20, 10, 30, 0),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 20, 30, 30),
        ),
    },
    "Kh24": {
        "degrees": (8, 7, 7, 6, 6, 6, 5, 5, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (10, 10), (20, 10), (30, 10), (0, 20), (10, 20), (20, 20), (30, 20), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (10, 0, 10, 30),
            (20, 0, 20, 30),
            (30, 0, 30, 30),
            (0, 0, 10, 10),
            (10, 0, 20, 10),
            (20, 0, 30, 10),
            (0, 20, 10, 10),
            (10, 10, 20, 20),
            (20, 20, 30, 10),
            (0, 20, 10, 30),
            (10, 20, 20, 30),
            (20, 20, 30, 30),
        ),
    },
    "Kh25": {
        "degrees": (9, 9, 7, 7, 6, 6, 4, 4, 4, 4),
        "points": ((0, 0), (10, 0), (20, 0), (30, 0), (0, 10), (15, 10), (30, 10), (7.5, 15), (22.5, 15), (0, 20), (15, 20), (30, 20), (5, 25), (0, 30), (10, 30), (20, 30), (30, 30),),
        "segments": (
            (0, 0, 30, 0),
            (0, 10, 30, 10),
            (0, 20, 30, 20),
            (0, 30, 30, 30),
            (0, 0, 0, 30),
            (30, 0, 30, 30),
            (0, 0, 15, 10),
            (10, 0, 15, 10),
            (10, 0, 30, 10),
            (20, 0, 30, 10),
            (0, 10, 15, 20),
            (0, 20, 15, 10),
            (15, 10, 15, 20),
            (15, 10, 30, 20),
            (15, 20, 30, 10),
            (0, 20, 10, 30),
            (0, 30, 5, 25),
            (5, 25, 15, 20),
            (10, 30, 15, 20),
            (15, 20, 20, 30),
            (15, 20, 30, 30),
        ),
    },
    "Kc1": {
        "degrees": (8, 8, 8, 5, 5, 5, 5, 5, 5),
        "points": ((-10, -10), (10, -10), (-20, -5), (0, -5), (20, -5), (0, 0), (-20, 5), (0, 5), (20, 5), (-10, 10), (10, 10), (-15, 0), (-10, 5), (15, 0), (10, 5),),
        "segments": (
            (-20, -5, -20, 5),
            (0, -5, 0, 5),
            (20, -5, 20, 5),
            (-20, -5, -10, -10),
            (-10, -10, 0, -5),
            (0, -5, 10, -10),
            (10, -10, 20, -5),
            (-20, 5, -10, 10),
            (-10, 10, 0, 5),
            (0, 5, 10, 10),
            (10, 10, 20, 5),
            (-10, -10, -15, 0),
            (-10, -10, 0, 0),
            (-20, -5, -15, 0),
            (-15, 0, 0, 0),
            (-15, 0, -20, 5),
            (-15, 0, -10, 5),
            (-10, 5, 0, 0),
            (-20, 5, 0, 5),
            (-10, 5, -10, 10),
            (10, -10, 15, 0),
            (10, -10, 0, 0),
            (20, -5, 15, 0),
            (15, 0, 0, 0),
            (15, 0, 20, 5),
            (15, 0, 10, 5),
            (10, 5, 0, 0),
            (20, 5, 0, 5),
            (10, 5, 10, 10),
        ),
    },
    "Kc2": {
        "degrees": (9, 9, 7, 6, 6, 5, 5, 5, 4, 4),
        "points": ((-10, -10), (10, -10), (-20, -5), (0, -5), (20, -5), (0, 0), (-20, 5), (0, 5), (20, 5), (-10, 10), (10, 10), (-15, 0), (-10, 5), (10, -5), (15, 0), (10, 5),),
        "segments": (
            (-20, -5, -20, 5),
            (0, -5, 0, 5),
            (20, -5, 20, 5),
            (-20, -5, -10, -10),
            (-10, -10, 0, -5),
            (0, -5, 10, -10),
            (10, -10, 20, -5),
            (-20, 5, -10, 10),
            (-10, 10, 0, 5),
            (0, 5, 10, 10),
            (10, 10, 20, 5),
            (-10, -10, -15, 0),
            (-10, -10, 0, 0),
            (-20, -5, -15, 0),
            (-15, 0, 0, 0),
            (-15, 0, -20, 5),
            (-15, 0, -10, 5),
            (-10, 5, 0, 0),
            (-20, 5, 0, 5),
            (-10, 5, -10, 10),
            (10, -10, 10, 10),
            (0, -5, 20, -5),
            (10, -5, 0, 0),
            (10, -5, 20, 5),
            (0, 0, 10, 5),
            (10, 5, 20, -5),
            (20, 5, 0, 5),
        ),
    },
    "Kc3": {
        "degrees": (10, 10, 6, 6, 6, 6, 6, 4, 4, 4, 4),
        "points": ((-10, -10), (10, -10), (-20, -5), (0, -5), (20, -5), (0, 0), (-20, 5), (0, 5), (20, 5), (-10, 10), (10, 10), (-10, -5), (-15, 0), (-10, 5), (10, -5), (15, 0), (10, 5),),
        "segments": (
            (-20, -5, -20, 5),
            (0, -5, 0, 5),
            (20, -5, 20, 5),
            (-20, -5, -10, -10),
            (-10, -10, 0, -5),
            (0, -5, 10, -10),
            (10, -10, 20, -5),
            (-20, 5, -10, 10),
            (-10, 10, 0, 5),
            (0, 5, 10, 10),
            (10, 10, 20, 5),
            (-10, -10, -10, 10),
            (0, -5, -20, -5),
            (-10, -5, 0, 0),
            (-10, -5, -20, 5),
            (0, 0, -10, 5),
            (-10, 5, -20, -5),
            (-20, 5, 0, 5),
            (10, -10, 10, 10),
            (0, -5, 20, -5),
            (10, -5, 0, 0),
            (10, -5, 20, 5),
            (0, 0, 10, 5),
            (10, 5, 20, -5),
            (20, 5, 0, 5),
        ),
    },
    "Kc4": {
        "degrees": (10, 8, 8, 6, 6, 6, 6, 4, 4, 4, 4),
        "points": ((-10, -10), (10, -10), (-20, -5), (0, -5), (20, -5), (0, 0), (-20, 5), (0, 5), (20, 5), (-10, 10), (10, 10), (-10, -5), (-15, 0), (-10, 5), (6, -4), (15, -2.5), (12.73, 3.18),),
        "segments": (
            (-20, -5, -20, 5),
            (0, -5, 0, 5),
            (20, -5, 20, 5),
            (-20, -5, -10, -10),
            (-10, -10, 0, -5),
            (0, -5, 10, -10),
            (10, -10, 20, -5),
            (-20, 5, -10, 10),
            (-10, 10, 0, 5),
            (0, 5, 10, 10),
            (10, 10, 20, 5),
            (-10, -10, -10, 10),
            (0, -5, -20, -5),
            (-10, -5, 0, 0),
            (-10, -5, -20, 5),
            (0, 0, -10, 5),
            (-10, 5, -20, -5),
            (-20, 5, 0, 5),
            (10, -10, 6, -4),
            (10, -10, 20, 5),
            (0, -5, 15, -2.5),
            (20, -5, 15, -2.5),
            (0, 0, 6, -4),
            (0, 0, 15, -2.5),
            (0, 0, 20, 5),
            (0, 0, 10, 10),
            (10, 10, 15, -2.5),
        ),
    },
}
