"""Tour of the core connectivity notions on the canonical fixtures.

Shows strong bridges, 2-edge-connected blocks, and 2-edge-connected
components, including the G5 gadget where two vertices are 2-edge-connected
without sharing a component.
"""
from twoec import blocks, components, strong_bridges
from twoec.fixtures import g1, g2, g4, g5

for name, g in [("bidirected triangle", g1()),
                ("directed 3-cycle", g2()),
                ("two linked 3-cycles", g4()),
                ("two-path gadget", g5())]:
    sb = strong_bridges(g)
    b = blocks(g)
    c = components(g)
    print(f"{name}: n={g.n} m={g.m}")
    print(f"  strong bridges: {sorted((g.tail(e), g.head(e)) for e in sb)}")
    print(f"  blocks:     {b.comp.tolist()}")
    print(f"  components: {c.comp.tolist()}")
    print()

g = g5()
print("G5 demonstrates the split between the two notions: vertices 0 and 1")
print("are in one 2EC block (two edge-disjoint paths each way through the")
print("intermediates) yet every 2EC component is a singleton, because no")
print("induced subgraph is bridgeless.")
