#!/usr/bin/env python3
"""Emit the per-root-system group data files under data/groups/.

Character tables, power maps, twisted Euler characters and n_g|h_g for the
23 umbral groups, written as JSON. Irrational entries use a small value
language: 'b7' = (-1+sqrt(-7))/2, 'a2' = sqrt(-2), '~x' = complex conjugate,
optional integer coefficient and sign prefix ('2b7', '-~b7').

The loader re-derives class sizes and |G| and validates both orthogonality
relations exactly, so transcription errors here fail loudly at load time.
"""
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "groups")

# ---------------------------------------------------------------- M24 (l=2)
M24_CLASSES = ["1A","2A","2B","3A","3B","4A","4B","4C","5A","6A","6B","7A","7B","8A",
               "10A","11A","12A","12B","14A","14B","15A","15B","21A","21B","23A","23B"]
M24_POW = {
  "2": "1A 1A 1A 3A 3B 2A 2A 2B 5A 3A 3B 7A 7B 4B 5A 11A 6A 6B 7A 7B 15A 15B 21A 21B 23A 23B",
  "3": "1A 2A 2B 1A 1A 4A 4B 4C 5A 2A 2B 7B 7A 8A 10A 11A 4A 4C 14B 14A 5A 5A 7B 7A 23A 23B",
  "5": "1A 2A 2B 3A 3B 4A 4B 4C 1A 6A 6B 7B 7A 8A 2B 11A 12A 12B 14B 14A 3A 3A 21B 21A 23B 23A",
  "7": "1A 2A 2B 3A 3B 4A 4B 4C 5A 6A 6B 1A 1A 8A 10A 11A 12A 12B 2A 2A 15B 15A 3B 3B 23B 23A",
  "11": "1A 2A 2B 3A 3B 4A 4B 4C 5A 6A 6B 7A 7B 8A 10A 1A 12A 12B 14A 14B 15B 15A 21A 21B 23B 23A",
  "23": "1A 2A 2B 3A 3B 4A 4B 4C 5A 6A 6B 7A 7B 8A 10A 11A 12A 12B 14A 14B 15A 15B 21A 21B 1A 1A",
}
M24_FS = "+ + o o o o + + + o o o o + o o + + + + + + + + + +"
M24_CHARS = [
 "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
 "23 7 -1 5 -1 -1 3 -1 3 1 -1 2 2 1 -1 1 -1 -1 0 0 0 0 -1 -1 0 0",
 "45 -3 5 0 3 -3 1 1 0 0 -1 b7 ~b7 -1 0 1 0 1 -b7 -~b7 0 0 b7 ~b7 -1 -1",
 "45 -3 5 0 3 -3 1 1 0 0 -1 ~b7 b7 -1 0 1 0 1 -~b7 -b7 0 0 ~b7 b7 -1 -1",
 "231 7 -9 -3 0 -1 -1 3 1 1 0 0 0 -1 1 0 -1 0 0 0 b15 ~b15 0 0 1 1",
 "231 7 -9 -3 0 -1 -1 3 1 1 0 0 0 -1 1 0 -1 0 0 0 ~b15 b15 0 0 1 1",
 "252 28 12 9 0 4 4 0 2 1 0 0 0 0 2 -1 1 0 0 0 -1 -1 0 0 -1 -1",
 "253 13 -11 10 1 -3 1 1 3 -2 1 1 1 -1 -1 0 0 1 -1 -1 0 0 1 1 0 0",
 "483 35 3 6 0 3 3 3 -2 2 0 0 0 -1 -2 -1 0 0 0 0 1 1 0 0 0 0",
 "770 -14 10 5 -7 2 -2 -2 0 1 1 0 0 0 0 0 -1 1 0 0 0 0 0 0 b23 ~b23",
 "770 -14 10 5 -7 2 -2 -2 0 1 1 0 0 0 0 0 -1 1 0 0 0 0 0 0 ~b23 b23",
 "990 -18 -10 0 3 6 2 -2 0 0 -1 b7 ~b7 0 0 0 0 1 b7 ~b7 0 0 b7 ~b7 1 1",
 "990 -18 -10 0 3 6 2 -2 0 0 -1 ~b7 b7 0 0 0 0 1 ~b7 b7 0 0 ~b7 b7 1 1",
 "1035 27 35 0 6 3 -1 3 0 0 2 -1 -1 1 0 1 0 0 -1 -1 0 0 -1 -1 0 0",
 "1035 -21 -5 0 -3 3 3 -1 0 0 1 2b7 2~b7 -1 0 1 0 -1 0 0 0 0 -b7 -~b7 0 0",
 "1035 -21 -5 0 -3 3 3 -1 0 0 1 2~b7 2b7 -1 0 1 0 -1 0 0 0 0 -~b7 -b7 0 0",
 "1265 49 -15 5 8 -7 1 -3 0 1 0 -2 -2 1 0 0 -1 0 0 0 0 0 1 1 0 0",
 "1771 -21 11 16 7 3 -5 -1 1 0 -1 0 0 -1 1 0 0 -1 0 0 1 1 0 0 0 0",
 "2024 8 24 -1 8 8 0 0 -1 -1 0 1 1 0 -1 0 -1 0 1 1 -1 -1 1 1 0 0",
 "2277 21 -19 0 6 -3 1 -3 -3 0 2 2 2 -1 1 0 0 0 0 0 0 0 -1 -1 0 0",
 "3312 48 16 0 -6 0 0 0 -3 0 -2 1 1 0 1 1 0 0 -1 -1 0 0 1 1 0 0",
 "3520 64 0 10 -8 0 0 0 0 -2 0 -1 -1 0 0 0 0 0 1 1 0 0 -1 -1 1 1",
 "5313 49 9 -15 0 1 -3 -3 3 1 0 0 0 -1 -1 0 1 0 0 0 0 0 0 0 0 0",
 "5544 -56 24 9 0 -8 0 0 -1 1 0 0 0 0 -1 0 1 0 0 0 -1 -1 0 0 1 1",
 "5796 -28 36 -9 0 -4 4 0 1 -1 0 0 0 0 1 -1 -1 0 0 0 1 1 0 0 0 0",
 "10395 -21 -45 0 0 3 -1 3 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 -1 -1",
]
M24_FUSIONS = {"7AB": ["7A","7B"], "14AB": ["14A","14B"], "15AB": ["15A","15B"],
               "21AB": ["21A","21B"], "23AB": ["23A","23B"]}
M24_TWISTED = {
  # label: (ng, hg, chiA_bar)
  "1A": (1,1,24), "2A": (2,1,8), "2B": (2,2,0), "3A": (3,1,6), "3B": (3,3,0),
  "4A": (4,2,0), "4B": (4,1,4), "4C": (4,4,0), "5A": (5,1,4), "6A": (6,1,2),
  "6B": (6,6,0), "7AB": (7,1,3), "8A": (8,1,2), "10A": (10,2,0), "11A": (11,1,2),
  "12A": (12,2,0), "12B": (12,12,0), "14AB": (14,1,1), "15AB": (15,1,1),
  "21AB": (21,3,0), "23AB": (23,1,1),
}

# ------------------------------------------------------------- 2.M12 (l=3)
M12_CLASSES = ["1A","2A","4A","2B","2C","3A","6A","3B","6B","4B","4C","5A","10A","12A",
               "6C","6D","8A","8B","8C","8D","20A","20B","11A","22A","11B","22B"]
M12_POW = {
  "2": "1A 1A 2A 1A 1A 3A 3A 3B 3B 2B 2B 5A 5A 6B 3A 3A 4B 4B 4C 4C 10A 10A 11B 11B 11A 11A",
  "3": "1A 2A 4A 2B 2C 1A 2A 1A 2A 4B 4C 5A 10A 4A 2B 2C 8A 8B 8C 8D 20A 20B 11A 22A 11B 22B",
  "5": "1A 2A 4A 2B 2C 3A 6A 3B 6B 4B 4C 1A 2A 12A 6C 6D 8B 8A 8D 8C 4A 4A 11A 22A 11B 22B",
  "11": "1A 2A 4A 2B 2C 3A 6A 3B 6B 4B 4C 5A 10A 12A 6C 6D 8A 8B 8C 8D 20B 20A 1A 2A 1A 2A",
}
M12_FS = "+ + + o o + + + + + + + + + + o o + - o o o o + o o"
M12_CHARS = [
 "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
 "11 11 -1 3 3 2 2 -1 -1 -1 3 1 1 -1 0 0 -1 -1 1 1 -1 -1 0 0 0 0",
 "11 11 -1 3 3 2 2 -1 -1 3 -1 1 1 -1 0 0 1 1 -1 -1 -1 -1 0 0 0 0",
 "16 16 4 0 0 -2 -2 1 1 0 0 1 1 1 0 0 0 0 0 0 -1 -1 b11 b11 ~b11 ~b11",
 "16 16 4 0 0 -2 -2 1 1 0 0 1 1 1 0 0 0 0 0 0 -1 -1 ~b11 ~b11 b11 b11",
 "45 45 5 -3 -3 0 0 3 3 1 1 0 0 -1 0 0 -1 -1 -1 -1 0 0 1 1 1 1",
 "54 54 6 6 6 0 0 0 0 2 2 -1 -1 0 0 0 0 0 0 0 1 1 -1 -1 -1 -1",
 "55 55 -5 7 7 1 1 1 1 -1 -1 0 0 1 1 1 -1 -1 -1 -1 0 0 0 0 0 0",
 "55 55 -5 -1 -1 1 1 1 1 3 -1 0 0 1 -1 -1 -1 -1 1 1 0 0 0 0 0 0",
 "55 55 -5 -1 -1 1 1 1 1 -1 3 0 0 1 -1 -1 1 1 -1 -1 0 0 0 0 0 0",
 "66 66 6 2 2 3 3 0 0 -2 -2 1 1 0 -1 -1 0 0 0 0 1 1 0 0 0 0",
 "99 99 -1 3 3 0 0 3 3 -1 -1 -1 -1 -1 0 0 1 1 1 1 -1 -1 0 0 0 0",
 "120 120 0 -8 -8 3 3 0 0 0 0 0 0 0 1 1 0 0 0 0 0 0 -1 -1 -1 -1",
 "144 144 4 0 0 0 0 -3 -3 0 0 -1 -1 1 0 0 0 0 0 0 -1 -1 1 1 1 1",
 "176 176 -4 0 0 -4 -4 -1 -1 0 0 1 1 -1 0 0 0 0 0 0 1 1 0 0 0 0",
 "10 -10 0 -2 2 1 -1 -2 2 0 0 0 0 0 1 -1 a2 ~a2 a2 ~a2 0 0 -1 1 -1 1",
 "10 -10 0 -2 2 1 -1 -2 2 0 0 0 0 0 1 -1 ~a2 a2 ~a2 a2 0 0 -1 1 -1 1",
 "12 -12 0 4 -4 3 -3 0 0 0 0 2 -2 0 1 -1 0 0 0 0 0 0 1 -1 1 -1",
 "32 -32 0 0 0 -4 4 2 -2 0 0 2 -2 0 0 0 0 0 0 0 0 0 -1 1 -1 1",
 "44 -44 0 4 -4 -1 1 2 -2 0 0 -1 1 0 1 -1 0 0 0 0 a5 ~a5 0 0 0 0",
 "44 -44 0 4 -4 -1 1 2 -2 0 0 -1 1 0 1 -1 0 0 0 0 ~a5 a5 0 0 0 0",
 "110 -110 0 -6 6 2 -2 2 -2 0 0 0 0 0 0 0 a2 ~a2 ~a2 a2 0 0 0 0 0 0",
 "110 -110 0 -6 6 2 -2 2 -2 0 0 0 0 0 0 0 ~a2 a2 a2 ~a2 0 0 0 0 0 0",
 "120 -120 0 8 -8 3 -3 0 0 0 0 0 0 0 -1 1 0 0 0 0 0 0 -1 1 -1 1",
 "160 -160 0 0 0 -2 2 -2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 -b11 b11 -~b11 ~b11",
 "160 -160 0 0 0 -2 2 -2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 -~b11 ~b11 -b11 b11",
]
M12_FUSIONS = {"8AB": ["8A","8B"], "8CD": ["8C","8D"], "20AB": ["20A","20B"],
               "11AB": ["11A","11B"], "22AB": ["22A","22B"]}
M12_TWISTED = {  # label: (ng, hg, chiA_bar, chiA)
  "1A": (1,1,12,12), "2A": (1,4,12,-12), "4A": (2,8,0,0), "2B": (2,1,4,4),
  "2C": (2,2,4,-4), "3A": (3,1,3,3), "6A": (3,4,3,-3), "3B": (3,3,0,0),
  "6B": (3,12,0,0), "4B": (4,2,0,0), "4C": (4,1,4,0), "5A": (5,1,2,2),
  "10A": (5,4,2,-2), "12A": (6,24,0,0), "6C": (6,1,1,1), "6D": (6,2,1,-1),
  "8AB": (8,4,0,0), "8CD": (8,1,2,0), "20AB": (10,8,0,0), "11AB": (11,1,1,1),
  "22AB": (11,4,1,-1),
}

# ------------------------------------------------------- 2.AGL_3(2) (l=4)
AGL_CLASSES = ["1A","2A","2B","4A","4B","2C","3A","6A","6B","6C","8A","4C","7A","14A","7B","14B"]
AGL_POW = {
  "2": "1A 1A 1A 2A 2B 1A 3A 3A 3A 3A 4A 2C 7A 7A 7B 7B",
  "3": "1A 2A 2B 4A 4B 2C 1A 2A 2B 2B 8A 4C 7B 14B 7A 14A",
  "7": "1A 2A 2B 4A 4B 2C 3A 6A 6B 6C 8A 4C 1A 2A 1A 2A",
}
AGL_FS = "+ o o + + + + + + + + + o o o o"
AGL_CHARS = [
 "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
 "3 3 3 -1 -1 -1 0 0 0 0 1 1 b7 b7 ~b7 ~b7",
 "3 3 3 -1 -1 -1 0 0 0 0 1 1 ~b7 ~b7 b7 b7",
 "6 6 6 2 2 2 0 0 0 0 0 0 -1 -1 -1 -1",
 "7 7 7 -1 -1 -1 1 1 1 1 -1 -1 0 0 0 0",
 "8 8 8 0 0 0 -1 -1 -1 -1 0 0 1 1 1 1",
 "7 7 -1 3 -1 -1 1 1 -1 -1 1 -1 0 0 0 0",
 "7 7 -1 -1 -1 3 1 1 -1 -1 -1 1 0 0 0 0",
 "14 14 -2 2 -2 2 -1 -1 1 1 0 0 0 0 0 0",
 "21 21 -3 1 1 -3 0 0 0 0 -1 1 0 0 0 0",
 "21 21 -3 -3 1 1 0 0 0 0 1 -1 0 0 0 0",
 "8 -8 0 0 0 0 2 -2 0 0 0 0 1 -1 1 -1",
 "8 -8 0 0 0 0 -1 1 a3 ~a3 0 0 1 -1 1 -1",
 "8 -8 0 0 0 0 -1 1 ~a3 a3 0 0 1 -1 1 -1",
 "24 -24 0 0 0 0 0 0 0 0 0 0 ~b7 -~b7 b7 -b7",
 "24 -24 0 0 0 0 0 0 0 0 0 0 b7 -b7 ~b7 -~b7",
]
AGL_FUSIONS = {"6BC": ["6B","6C"], "7AB": ["7A","7B"], "14AB": ["14A","14B"]}
AGL_TWISTED = {  # (ng, hg, chiA_bar, chiA)
  "1A": (1,1,8,8), "2A": (1,2,8,-8), "2B": (2,2,0,0), "4A": (2,4,0,0),
  "4B": (4,4,0,0), "2C": (2,1,4,0), "3A": (3,1,2,2), "6A": (3,2,2,-2),
  "6BC": (6,2,0,0), "8A": (4,8,0,0), "4C": (4,1,2,0), "7AB": (7,1,1,1),
  "14AB": (7,2,1,-1),
}

# ------------------------------------------------------ GL_2(5)/2 (l=5)
GL25_CLASSES = ["1A","2A","2B","2C","3A","6A","5A","10A","4A","4B","4C","4D","12A","12B"]
GL25_POW = {
  "2": "1A 1A 1A 1A 3A 3A 5A 5A 2A 2A 2C 2C 6A 6A",
  "3": "1A 2A 2B 2C 1A 2A 5A 10A 4B 4A 4D 4C 4B 4A",
  "5": "1A 2A 2B 2C 3A 6A 1A 2A 4A 4B 4C 4D 12A 12B",
}
GL25_FS = "+ + + + + + + o o o o o o +"
GL25_CHARS = [
 "1 1 1 1 1 1 1 1 1 1 1 1 1 1",
 "1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1",
 "4 4 0 0 1 1 -1 -1 2 2 0 0 -1 -1",
 "4 4 0 0 1 1 -1 -1 -2 -2 0 0 1 1",
 "5 5 1 1 -1 -1 0 0 1 1 -1 -1 1 1",
 "5 5 1 1 -1 -1 0 0 -1 -1 1 1 -1 -1",
 "6 6 -2 -2 0 0 1 1 0 0 0 0 0 0",
 "1 -1 1 -1 1 -1 1 -1 a1 -a1 a1 -a1 a1 -a1",
 "1 -1 1 -1 1 -1 1 -1 -a1 a1 -a1 a1 -a1 a1",
 "4 -4 0 0 1 -1 -1 1 2a1 -2a1 0 0 -a1 a1",
 "4 -4 0 0 1 -1 -1 1 -2a1 2a1 0 0 a1 -a1",
 "5 -5 1 -1 -1 1 0 0 a1 -a1 -a1 a1 a1 -a1",
 "5 -5 1 -1 -1 1 0 0 -a1 a1 a1 -a1 -a1 a1",
 "6 -6 -2 2 0 0 1 -1 0 0 0 0 0 0",
]
GL25_FUSIONS = {"4AB": ["4A","4B"], "4CD": ["4C","4D"], "12AB": ["12A","12B"]}
GL25_TWISTED = {  # (ng, hg, chiA_bar, chiA)
  "1A": (1,1,6,6), "2A": (1,4,6,-6), "2B": (2,2,2,-2), "2C": (2,1,2,2),
  "3A": (3,3,0,0), "6A": (3,12,0,0), "5A": (5,1,1,1), "10A": (5,4,1,-1),
  "4AB": (2,8,0,0), "4CD": (4,1,2,0), "12AB": (6,24,0,0),
}

# ------------------------------------------------- GL_2(3) (l=6 and l=12+4)
GL23_CLASSES = ["1A","2A","2B","4A","3A","6A","8A","8B"]
GL23_POW = {"2": "1A 1A 1A 2A 3A 3A 4A 4A", "3": "1A 2A 2B 4A 1A 2A 8A 8B"}
GL23_FS = "+ + + + + o o +"
GL23_CHARS = [
 "1 1 1 1 1 1 1 1",
 "1 1 -1 1 1 1 -1 -1",
 "2 2 0 2 -1 -1 0 0",
 "3 3 -1 -1 0 0 1 1",
 "3 3 1 -1 0 0 -1 -1",
 "2 -2 0 0 -1 1 a2 ~a2",
 "2 -2 0 0 -1 1 ~a2 a2",
 "4 -4 0 0 1 -1 0 0",
]
GL23_FUSIONS = {"8AB": ["8A","8B"]}
L6_TWISTED = {  # (ng, hg, chiA_bar, chiA, chiD_bar, chiD, chiD_check)
  "1A": (1,1,4,4,1,1,2), "2A": (1,2,4,-4,1,1,2), "2B": (2,1,2,0,1,-1,0),
  "4A": (2,2,0,0,1,1,2), "3A": (3,1,1,1,1,1,-1), "6A": (3,2,1,-1,1,1,-1),
  "8AB": (4,2,0,0,1,-1,0),
}
L12P4_TWISTED = {  # (ng, hg, chiE_bar, chiE)
  "1A": (1,1,4,4), "2A": (1,2,4,-4), "2B": (2,1,2,0), "4A": (2,4,0,0),
  "3A": (3,1,1,1), "6A": (3,2,1,-1), "8AB": (4,8,0,0),
}

# ----------------------------------------------------- 3.Sym_6 (l=6+3)
S63_CLASSES = ["1A","3A","2A","6A","3B","3C","4A","12A","5A","15A","15B","2B","2C","4B","6B","6C"]
S63_POW = {
  "2": "1A 3A 1A 3A 3B 3C 2A 6A 5A 15A 15B 1A 1A 2A 3B 3C",
  "3": "1A 1A 2A 2A 1A 1A 4A 4A 5A 5A 5A 2B 2C 4B 2B 2C",
  "5": "1A 3A 2A 6A 3B 3C 4A 12A 1A 3A 3A 2B 2C 4B 6B 6C",
}
S63_FS = "+ + + + + + + + + + + o o + + +"
S63_CHARS = [
 "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
 "1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1",
 "5 5 1 1 2 -1 -1 -1 0 0 0 3 -1 1 0 -1",
 "5 5 1 1 2 -1 -1 -1 0 0 0 -3 1 -1 0 1",
 "5 5 1 1 -1 2 -1 -1 0 0 0 -1 3 1 -1 0",
 "5 5 1 1 -1 2 -1 -1 0 0 0 1 -3 -1 1 0",
 "16 16 0 0 -2 -2 0 0 1 1 1 0 0 0 0 0",
 "9 9 1 1 0 0 1 1 -1 -1 -1 3 3 -1 0 0",
 "9 9 1 1 0 0 1 1 -1 -1 -1 -3 -3 1 0 0",
 "10 10 -2 -2 1 1 0 0 0 0 0 2 -2 0 -1 1",
 "10 10 -2 -2 1 1 0 0 0 0 0 -2 2 0 1 -1",
 "6 -3 -2 1 0 0 2 -1 1 b15 ~b15 0 0 0 0 0",
 "6 -3 -2 1 0 0 2 -1 1 ~b15 b15 0 0 0 0 0",
 "12 -6 4 -2 0 0 0 0 2 -1 -1 0 0 0 0 0",
 "18 -9 2 -1 0 0 2 -1 -2 1 1 0 0 0 0 0",
 "30 -15 -2 1 0 0 -2 1 0 0 0 0 0 0 0 0",
]
S63_FUSIONS = {"15AB": ["15A","15B"]}
S63_TWISTED = {  # (ng, hg, chiD_bar, chiD, chiD_check)
  "1A": (1,1,6,6,12), "3A": (1,3,6,6,-6), "2A": (2,1,2,2,4), "6A": (2,3,2,2,-2),
  "3B": (3,1,3,3,0), "3C": (3,3,0,0,0), "4A": (4,2,0,0,0), "12A": (4,6,0,0,0),
  "5A": (5,1,1,1,2), "15AB": (5,3,1,1,-1), "2B": (2,1,4,-4,0), "2C": (2,2,0,0,0),
  "4B": (4,1,2,-2,0), "6B": (6,1,1,-1,0), "6C": (6,6,0,0,0),
}

# -------------------------------------------------------- SL_2(3) (l=7)
SL23_CLASSES = ["1A","2A","4A","3A","6A","3B","6B"]
SL23_POW = {"2": "1A 1A 2A 3B 3A 3A 3B", "3": "1A 2A 4A 1A 2A 1A 2A"}
SL23_FS = "+ o o + - o o"
SL23_CHARS = [
 "1 1 1 1 1 1 1",
 "1 1 1 b3 ~b3 ~b3 b3",
 "1 1 1 ~b3 b3 b3 ~b3",
 "3 3 -1 0 0 0 0",
 "2 -2 0 -1 1 -1 1",
 "2 -2 0 -~b3 b3 -b3 ~b3",
 "2 -2 0 -b3 ~b3 -~b3 b3",
]
SL23_FUSIONS = {"3AB": ["3A","3B"], "6AB": ["6A","6B"]}
SL23_TWISTED = {  # (ng, hg, chiA_bar, chiA)
  "1A": (1,1,4,4), "2A": (1,4,4,-4), "4A": (2,8,0,0), "3AB": (3,1,1,1),
  "6AB": (3,4,1,-1),
}

# ---------------------------------------------------------- Dih_4 (l=8)
DIH4_CLASSES = ["1A","2A","2B","2C","4A"]
DIH4_POW = {"2": "1A 1A 1A 1A 2A"}
DIH4_FS = "+ + + + +"
DIH4_CHARS = [
 "1 1 1 1 1",
 "1 1 -1 -1 1",
 "1 1 -1 1 -1",
 "1 1 1 -1 -1",
 "2 -2 0 0 0",
]
DIH4_TWISTED = {  # (ng, hg, chiA_bar, chiA, chiD_bar, chiD)
  "1A": (1,1,2,2,2,2), "2A": (1,2,2,-2,2,-2), "2B": (2,1,0,0,2,0),
  "2C": (2,1,2,0,0,0), "4A": (2,4,0,0,0,0),
}

# ---------------------------------------------------------- Dih_6 (l=9)
DIH6_CLASSES = ["1A","2A","2B","2C","3A","6A"]
DIH6_POW = {"2": "1A 1A 1A 1A 3A 3A", "3": "1A 2A 2B 2C 1A 2A"}
DIH6_FS = "+ + + + + +"
DIH6_CHARS = [
 "1 1 1 1 1 1",
 "1 1 -1 -1 1 1",
 "2 2 0 0 -1 -1",
 "1 -1 -1 1 1 -1",
 "1 -1 1 -1 1 -1",
 "2 -2 0 0 -1 1",
]
DIH6_TWISTED = {  # (ng, hg, chiA_bar, chiA)
  "1A": (1,1,3,3), "2A": (1,4,3,-3), "2B": (2,1,1,1), "2C": (2,2,1,-1),
  "3A": (3,3,0,0), "6A": (3,12,0,0),
}

# ----------------------------------------------------------- Z4 (l=10,13)
Z4_CLASSES = ["1A","2A","4A","4B"]
Z4_POW = {"2": "1A 1A 2A 2A"}
Z4_FS = "+ + o o"
Z4_CHARS = [
 "1 1 1 1",
 "1 1 -1 -1",
 "1 -1 a1 -a1",
 "1 -1 -a1 a1",
]
Z4_FUSIONS = {"4AB": ["4A","4B"]}
L10_TWISTED = {  # (ng, hg, chiA_bar, chiA, chiD_bar, chiD)
  "1A": (1,1,2,2,1,1), "2A": (1,2,2,-2,1,1), "4AB": (2,2,0,0,1,-1),
}
L13_TWISTED = {  # (ng, hg, chiA_bar, chiA)
  "1A": (1,1,2,2), "2A": (1,4,2,-2), "4AB": (2,8,0,0),
}

# --------------------------------------------------------- Sym_4 (l=10+5)
S4_CLASSES = ["1A","2A","3A","2B","4A"]
S4_POW = {"2": "1A 1A 3A 1A 2A", "3": "1A 2A 1A 2B 4A"}
S4_FS = "+ + + + +"
S4_CHARS = [
 "1 1 1 1 1",
 "1 1 1 -1 -1",
 "2 2 -1 0 0",
 "3 -1 0 1 -1",
 "3 -1 0 -1 1",
]
S4_TWISTED = {  # (ng, hg, chiD_bar, chiD)
  "1A": (1,1,4,4), "2A": (2,2,0,0), "3A": (3,1,1,1), "2B": (2,1,2,-2),
  "4A": (4,4,0,0),
}

# ------------------------------------------------------------- Z2 groups
Z2_CLASSES = ["1A","2A"]
Z2_POW = {"2": "1A 1A"}
Z2_FS = "+ +"
Z2_CHARS = ["1 1", "1 -1"]

# --------------------------------------------------------- Sym_3 groups
S3_CLASSES = ["1A","2A","3A"]
S3_POW = {"2": "1A 1A 3A", "3": "1A 2A 1A"}
S3_FS = "+ + +"
S3_CHARS = ["1 1 1", "1 -1 1", "2 0 -1"]

TRIV_CLASSES = ["1A"]


def twisted_json(table, fields):
    out = {}
    for label, vals in table.items():
        rec = {"ng": vals[0], "hg": vals[1]}
        for name, v in zip(fields, vals[2:]):
            rec[name] = v
        out[label] = rec
    return out


def emit(name, X, lam, coxeter, components, group, classes, fs, pow_, chars,
         fusions, twisted, twisted_fields):
    data = {
        "X": X,
        "lambency": lam,
        "coxeter": coxeter,
        "components": components,
        "group": group,
        "classes": classes,
        "fs": fs.split(),
        "powermaps": {p: v.split() for p, v in pow_.items()},
        "chars": [row.split() for row in chars],
        "fusions": fusions,
        "twisted": twisted_json(twisted, twisted_fields),
    }
    for row in data["chars"]:
        assert len(row) == len(classes), (X, row)
    for p, v in data["powermaps"].items():
        assert len(v) == len(classes), (X, p)
    covered = set(classes)
    for label, members in fusions.items():
        for c in members:
            covered.discard(c)
        covered.add(label)
    assert set(twisted) == covered, (X, set(twisted) ^ covered)
    os.makedirs(OUT, exist_ok=True)
    with open(os.path.join(OUT, name + ".json"), "w") as f:
        json.dump(data, f, indent=1)
        f.write("\n")


AF = ["chiA_bar", "chiA"]
emit("A1_24", "A1^24", "2", 2, [["A",1,24]], "M24", M24_CLASSES, M24_FS, M24_POW,
     M24_CHARS, M24_FUSIONS, M24_TWISTED, ["chiA_bar"])
emit("A2_12", "A2^12", "3", 3, [["A",2,12]], "2.M12", M12_CLASSES, M12_FS, M12_POW,
     M12_CHARS, M12_FUSIONS, M12_TWISTED, AF)
emit("A3_8", "A3^8", "4", 4, [["A",3,8]], "2.AGL3(2)", AGL_CLASSES, AGL_FS, AGL_POW,
     AGL_CHARS, AGL_FUSIONS, AGL_TWISTED, AF)
emit("A4_6", "A4^6", "5", 5, [["A",4,6]], "GL2(5)/2", GL25_CLASSES, GL25_FS, GL25_POW,
     GL25_CHARS, GL25_FUSIONS, GL25_TWISTED, AF)
emit("A5_4D4", "A5^4D4", "6", 6, [["A",5,4],["D",4,1]], "GL2(3)", GL23_CLASSES, GL23_FS,
     GL23_POW, GL23_CHARS, GL23_FUSIONS, L6_TWISTED,
     ["chiA_bar","chiA","chiD_bar","chiD","chiD_check"])
emit("A6_4", "A6^4", "7", 7, [["A",6,4]], "SL2(3)", SL23_CLASSES, SL23_FS, SL23_POW,
     SL23_CHARS, SL23_FUSIONS, SL23_TWISTED, AF)
emit("A7_2D5_2", "A7^2D5^2", "8", 8, [["A",7,2],["D",5,2]], "Dih4", DIH4_CLASSES,
     DIH4_FS, DIH4_POW, DIH4_CHARS, {}, DIH4_TWISTED,
     ["chiA_bar","chiA","chiD_bar","chiD"])
emit("A8_3", "A8^3", "9", 9, [["A",8,3]], "Dih6", DIH6_CLASSES, DIH6_FS, DIH6_POW,
     DIH6_CHARS, {}, DIH6_TWISTED, AF)
emit("A9_2D6", "A9^2D6", "10", 10, [["A",9,2],["D",6,1]], "Z4", Z4_CLASSES, Z4_FS,
     Z4_POW, Z4_CHARS, Z4_FUSIONS, L10_TWISTED, ["chiA_bar","chiA","chiD_bar","chiD"])
emit("A11D7E6", "A11D7E6", "12", 12, [["A",11,1],["D",7,1],["E",6,1]], "Z2",
     Z2_CLASSES, Z2_FS, Z2_POW, Z2_CHARS, {},
     {"1A": (1,1,1,1,1,1,1,1), "2A": (1,2,1,-1,1,-1,1,-1)},
     ["chiA_bar","chiA","chiD_bar","chiD","chiE_bar","chiE"])
emit("A12_2", "A12^2", "13", 13, [["A",12,2]], "Z4", Z4_CLASSES, Z4_FS, Z4_POW,
     Z4_CHARS, Z4_FUSIONS, L13_TWISTED, AF)
emit("A15D9", "A15D9", "16", 16, [["A",15,1],["D",9,1]], "Z2", Z2_CLASSES, Z2_FS,
     Z2_POW, Z2_CHARS, {}, {"1A": (1,1,1,1,1,1), "2A": (1,2,1,-1,1,-1)},
     ["chiA_bar","chiA","chiD_bar","chiD"])
emit("A17E7", "A17E7", "18", 18, [["A",17,1],["E",7,1]], "Z2", Z2_CLASSES, Z2_FS,
     Z2_POW, Z2_CHARS, {}, {"1A": (1,1,1,1,1), "2A": (1,2,1,-1,1)},
     ["chiA_bar","chiA","chiE_bar"])
emit("A24", "A24", "25", 25, [["A",24,1]], "Z2", Z2_CLASSES, Z2_FS, Z2_POW, Z2_CHARS,
     {}, {"1A": (1,1,1,1), "2A": (1,4,1,-1)}, AF)
emit("D4_6", "D4^6", "6+3", 6, [["D",4,6]], "3.Sym6", S63_CLASSES, S63_FS, S63_POW,
     S63_CHARS, S63_FUSIONS, S63_TWISTED, ["chiD_bar","chiD","chiD_check"])
emit("D6_4", "D6^4", "10+5", 10, [["D",6,4]], "Sym4", S4_CLASSES, S4_FS, S4_POW,
     S4_CHARS, {}, S4_TWISTED, ["chiD_bar","chiD"])
emit("D8_3", "D8^3", "14+7", 14, [["D",8,3]], "Sym3", S3_CLASSES, S3_FS, S3_POW,
     S3_CHARS, {}, {"1A": (1,1,3,3), "2A": (2,1,1,1), "3A": (3,3,0,0)},
     ["chiD_bar","chiD"])
emit("D10E7_2", "D10E7^2", "18+9", 18, [["D",10,1],["E",7,2]], "Z2", Z2_CLASSES,
     Z2_FS, Z2_POW, Z2_CHARS, {}, {"1A": (1,1,1,1,2), "2A": (2,1,1,-1,0)},
     ["chiD_bar","chiD","chiE_bar"])
emit("D12_2", "D12^2", "22+11", 22, [["D",12,2]], "Z2", Z2_CLASSES, Z2_FS, Z2_POW,
     Z2_CHARS, {}, {"1A": (1,1,2,2), "2A": (2,2,0,0)}, ["chiD_bar","chiD"])
emit("D16E8", "D16E8", "30+15", 30, [["D",16,1],["E",8,1]], "1", TRIV_CLASSES, "+",
     {}, ["1"], {}, {"1A": (1,1,1,1,1)}, ["chiD_bar","chiD","chiE_bar"])
emit("D24", "D24", "46+23", 46, [["D",24,1]], "1", TRIV_CLASSES, "+", {}, ["1"],
     {}, {"1A": (1,1,1,1)}, ["chiD_bar","chiD"])
emit("E6_4", "E6^4", "12+4", 12, [["E",6,4]], "GL2(3)", GL23_CLASSES, GL23_FS,
     GL23_POW, GL23_CHARS, GL23_FUSIONS, L12P4_TWISTED, ["chiE_bar","chiE"])
emit("E8_3", "E8^3", "30+6,10,15", 30, [["E",8,3]], "Sym3", S3_CLASSES, S3_FS,
     S3_POW, S3_CHARS, {}, {"1A": (1,1,3), "2A": (2,1,1), "3A": (3,3,0)},
     ["chiE_bar"])

print("wrote", len(os.listdir(OUT)), "group files to", OUT)
