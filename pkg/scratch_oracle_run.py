"""Scratch: compute every DERIVED expected value with the independent oracle."""
import sys
sys.path.insert(0, "tests")
from oracles import *  # noqa

def show(label, value):
    print(f"{label::<50} {value}")

# Spot closeness values
show("C(P_3)", graph_closeness(3, path_edges(3)))
show("C(P_4)", graph_closeness(4, path_edges(4)))
show("C(P_5)", graph_closeness(5, path_edges(5)))
show("C(C_3)", graph_closeness(3, cycle_edges(3)))
show("C(C_4)", graph_closeness(4, cycle_edges(4)))
show("C(C_5)", graph_closeness(5, cycle_edges(5)))
show("C(C_6)", graph_closeness(6, cycle_edges(6)))
show("C(K_{1,3})", graph_closeness(4, [(0, 1), (0, 2), (0, 3)]))
show("C(D(4;1,0)) paw", graph_closeness(4, triangle_path_edges(4, 1, 0)))
show("C(D(5;1,0))", graph_closeness(5, triangle_path_edges(5, 1, 0)))
show("C(D(5;0,1))", graph_closeness(5, triangle_path_edges(5, 0, 1)))
show("C(D(5;1,1)) bowtie", graph_closeness(5, triangle_path_edges(5, 1, 1)))
show("C(D(6;1,0))", graph_closeness(6, triangle_path_edges(6, 1, 0)))
show("C(D(6;1,1))", graph_closeness(6, triangle_path_edges(6, 1, 1)))
show("C(D(6;2,0))", graph_closeness(6, triangle_path_edges(6, 2, 0)))

# cactus checks
show("is_cactus(C_5)", is_cactus(5, cycle_edges(5)))
show("is_cactus(K_4)", is_cactus(4, list(combinations(range(4), 2))))
show("is_cactus(D(7;1,2))", is_cactus(7, triangle_path_edges(7, 1, 2)))
show("D(6;2,0) ~ D(6;0,2)", isomorphic(6, triangle_path_edges(6, 2, 0), 6, triangle_path_edges(6, 0, 2)))
show("bowtie ~ D(5;1,1)", isomorphic(5, [(0,1),(1,2),(2,0),(2,3),(3,4),(4,2)], 5, triangle_path_edges(5, 1, 1)))

# Transformation examples
# L-cycle: C_5 -> C_5 - u1u5 + u3u5 (0-based: remove (0,4), add (2,4))
before = cycle_edges(5)
after = [e for e in before if set(e) != {0, 4}] + [(2, 4)]
show("shorten C_5: before", graph_closeness(5, before))
show("shorten C_5: after", graph_closeness(5, after))
show("after ~ D(5;1,0)", isomorphic(5, after, 5, triangle_path_edges(5, 1, 0)))

before = cycle_edges(6)
after = [e for e in before if set(e) != {0, 5}] + [(3, 5)]
show("shorten C_6: before", graph_closeness(6, before))
show("shorten C_6: after", graph_closeness(6, after))
show("after ~ D(6;1,0)", isomorphic(6, after, 6, triangle_path_edges(6, 1, 0)))

# L-c4: C_4 alone -> triangle + pendant
before = cycle_edges(4)
after = [e for e in before if set(e) != {0, 3}] + [(1, 3)]
show("swap C_4: before", graph_closeness(4, before))
show("swap C_4: after", graph_closeness(4, after))

# C_4 with one pendant at u1 (vertex 0): H_1 = {0, 4}
before = cycle_edges(4) + [(0, 4)]
after = [e for e in before if set(e) != {0, 3}] + [(1, 3)]
show("swap C_4+pendant: before", graph_closeness(5, before))
show("swap C_4+pendant: after", graph_closeness(5, after))

# L-branch: K_{1,3} -> P_4 (move leaf 3 from center 0 to leaf 1)
before = [(0, 1), (0, 2), (0, 3)]
after = [(0, 1), (0, 2), (1, 3)]
show("branch K13: before", graph_closeness(4, before))
show("branch K13: after", graph_closeness(4, after))
show("after ~ P_4", isomorphic(4, after, 4, path_edges(4)))

# spider legs 2,2,1: center 0; legs 0-1-2, 0-3-4, 0-5 (n=6)
spider = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]
show("spider221", graph_closeness(6, spider))
# alternatives: move leg {5} branch to farthest vertex of leg A (=2) or leg B (=4)
alt1 = [(0, 1), (1, 2), (0, 3), (3, 4), (2, 5)]
alt2 = [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5)]
show("spider221 alt1", graph_closeness(6, alt1))
show("spider221 alt2", graph_closeness(6, alt2))

# L-triangle example 1: triangle 0,1,2 with pendants 3@0, 4@1, 5@2 (n=6 net)
net = cycle_edges(3) + [(0, 3), (1, 4), (2, 5)]
show("net n=6", graph_closeness(6, net))
# move H_3 (pendant 5 at vertex 2) to farthest vertex of H_1 (=3) or H_2 (=4)
net1 = cycle_edges(3) + [(0, 3), (1, 4), (3, 5)]
net2 = cycle_edges(3) + [(0, 3), (1, 4), (4, 5)]
show("net alt1", graph_closeness(6, net1))
show("net alt2", graph_closeness(6, net2))

# L-triangle example 2: central triangle 0,1,2; end triangles (0,3,4), (1,5,6); pendant 7@2 (n=8,k=3)
g8 = cycle_edges(3) + [(0, 3), (3, 4), (4, 0), (1, 5), (5, 6), (6, 1), (2, 7)]
show("tri3+pend n=8", graph_closeness(8, g8))
show("is_cactus", is_cactus(8, g8))
# farthest from 0 in H_1={0,3,4}: 3 and 4 at distance 1, v_1 = 3 (smallest)
g8a = cycle_edges(3) + [(0, 3), (3, 4), (4, 0), (1, 5), (5, 6), (6, 1), (3, 7)]
g8b = cycle_edges(3) + [(0, 3), (3, 4), (4, 0), (1, 5), (5, 6), (6, 1), (5, 7)]
show("tri3 alt1", graph_closeness(8, g8a))
show("tri3 alt2", graph_closeness(8, g8b))

# L-pendant: triangle (0,1,2), pendant 3@0, pendant 4@2 -> triangle with P_3 tail
lp_before = cycle_edges(3) + [(0, 3), (2, 4)]
show("L5 ex1 before", graph_closeness(5, lp_before))
lp_after = cycle_edges(3) + [(4, 3), (2, 4)]
show("L5 ex1 after", graph_closeness(5, lp_after))
show("after ~ D(5;1,0)", isomorphic(5, lp_after, 5, triangle_path_edges(5, 1, 0)))

# L5 ex2: H_1=P_3, H_2=C_3, r=3: triangle (0,1,2), tail 2-3-4, branch 5-6 path at 0
lp2 = cycle_edges(3) + [(2, 3), (3, 4), (0, 5), (5, 6)]
show("L5 ex2 before", graph_closeness(7, lp2))
# case (i): C_{H2}(v2)=C_{H2}(v1)=1 -> move H_1 (5,6 branch at 0) to tail end 4
lp2_after = cycle_edges(3) + [(2, 3), (3, 4), (4, 5), (5, 6)]
show("L5 ex2 after", graph_closeness(7, lp2_after))

# Known counterexamples (hand-derived) -------------------------------------
# L1 equality at n=7: C_5 (0..4) + two leaves 5,6 at vertex 2
ce7 = cycle_edges(5) + [(2, 5), (2, 6)]
ce7_after = [e for e in cycle_edges(5) if set(e) != {0, 4}] + [(2, 4), (2, 5), (2, 6)]
show("L1 ce n=7 before", graph_closeness(7, ce7))
show("L1 ce n=7 after", graph_closeness(7, ce7_after))

# L1 strict increase at n=8: C_5 + three leaves at vertex 2
ce8 = cycle_edges(5) + [(2, 5), (2, 6), (2, 7)]
ce8_after = [e for e in cycle_edges(5) if set(e) != {0, 4}] + [(2, 4), (2, 5), (2, 6), (2, 7)]
show("L1 ce n=8 before", graph_closeness(8, ce8))
show("L1 ce n=8 after", graph_closeness(8, ce8_after))

# L2 (c4-swap) increase at n=8: C_4 (0..3) + path 0-4-5 + triangle (1,6,7)
l2ce = cycle_edges(4) + [(0, 4), (4, 5), (1, 6), (6, 7), (7, 1)]
l2ce_after = [e for e in l2ce if set(e) != {0, 3}] + [(1, 3)]
show("L2 ce n=8 before", graph_closeness(8, l2ce))
show("L2 ce n=8 after", graph_closeness(8, l2ce_after))
show("L2 ce cactus", is_cactus(8, l2ce))

# L6 (balance) increase at n=8: triangle H1 (0,1,2) at w1=0, path 0-3-4,
# apex 5 on edge (3,4), H2 = P_3 (4,6,7) attached at its end 4
l6ce = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5), (5, 4), (4, 6), (6, 7)]
l6ce_after = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (0, 5), (5, 3), (4, 6), (6, 7)]
show("L6 ce n=8 before", graph_closeness(8, l6ce))
show("L6 ce n=8 after", graph_closeness(8, l6ce_after))
show("L6 ce cactus", is_cactus(8, l6ce))

# balance D(6;2,0) -> D(6;1,1) numbers
show("C(D(6;2,0))", graph_closeness(6, triangle_path_edges(6, 2, 0)))
show("C(D(6;1,1))", graph_closeness(6, triangle_path_edges(6, 1, 1)))

# Enumeration class counts (filter oracle) — small ones only here
for (n, k) in [(3, 1), (4, 1), (5, 0), (5, 1), (5, 2)]:
    show(f"classes({n},{k})", cactus_class_count(n, k))
