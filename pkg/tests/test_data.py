#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

cu_rows = [[1, 0, 1], [0, 1, 1]]
ncnu_rows = [[1, 0, 2, 1], [0, 1, 1, 0], [0, 0, 0, 2]]
braid4_rows = [[1, 1, 1, 0, 0, 0], [0, 1, 1, 1, 1, 0], [0, 0, 1, 0, 1, 1]]
snf_rows = [[0, 2], [1, 1], [0, 0]]
non_primitive_rows = [[2, 0], [0, 1]]

cu_D = {"rank": 2, "a": 1, "b": 1,
        "hypersurfaces": [{"chi": [1, 0]}, {"chi": [0, 1]}, {"chi": [1, 1]}]}
ncu_D = {"rank": 2, "a": 1, "b": 1,
         "hypersurfaces": [{"chi": [1, 0]}, {"chi": [0, 1]}, {"chi": [1, 1]},
                           {"chi": [0, 1], "u": ["-1"], "v": ["1/2"]},
                           {"chi": [1, 1], "u": ["-1"], "v": ["1/2"]}]}
shifted_D = {"rank": 1, "a": 1, "b": 1, "hypersurfaces": [{"chi": [1], "u": ["3/6"], "v": ["5/4"]}]}
bad_rank_D = {"rank": 2, "hypersurfaces": [{"chi": [1, 0]}, {"chi": [1, 1, 0]}]}
bad_rational_D = {"rank": 1, "hypersurfaces": [{"chi": [1], "u": ["1/0"]}]}
non_primitive_D = {"rank": 2, "hypersurfaces": [{"chi": [1, 0]}, {"chi": [2, 2]}]}

builtin_names = ["cu", "ncu", "ncnu", "braid:3", "braid:4", "conf:3", "boolean:2"]
ring_builtin_names = ["cu", "ncu", "ncnu", "braid:3", "braid:4", "conf:3", "boolean:2"]
parameter_pairs = [(1, 1), (0, 2), (1, 2), (2, 1)]

cu_betti = {(1, 1): (1, 5, 6), (0, 2): (1, 3, 2), (1, 2): (1, 2, 4, 3, 2)}
ncu_betti = {(1, 1): (1, 7, 12), (0, 2): (1, 5, 6), (2, 1): (1, 4, 11, 14, 12)}
ncnu_betti = {(1, 1): (1, 7, 18, 18), (0, 2): (1, 4, 7, 6), (1, 2): (1, 3, 7, 9, 11, 7, 6),
              (2, 1): (1, 6, 19, 36, 46, 36, 18)}
braid_betti = {(3, 1, 1): (1, 5, 6), (3, 0, 2): (1, 3, 2), (4, 1, 1): (1, 9, 26, 24), (4, 0, 2): (1, 6, 11, 6),
               (4, 1, 2): (1, 3, 9, 13, 17, 11, 6), (4, 2, 1): (1, 6, 21, 44, 62, 52, 24)}

# 12, 13, 14, 23, 24, 34 in the essential braid:4 arrangement; 14 sits between the circuit 12, 13, 23
braid4_interleaved_X = (0, 1, 2, 3)
braid4_interleaved_circuit = (0, 1, 3)

cu_charpoly = [1, -3, 2]
ncu_charpoly = [1, -5, 6]
ncnu_charpoly = [1, -4, 7, -6]

cu_chamber_count = 6
braid_chamber_counts = {3: 6, 4: 24}
