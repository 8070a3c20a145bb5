"""Smoke tests for the python bindings: one pass over every exposed operation."""

import sys

import w6free as w6


def check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def main():
    k5 = w6.complete(5)
    check(k5.order == 5, "K5 order")
    check(k5.edge_count == 10, "K5 edges")
    check(k5.degree(0) == 4, "K5 degree")
    check(k5.has_edge(1, 2), "K5 edge")
    check(sorted(k5.neighbors(0)) == [1, 2, 3, 4], "K5 neighbors")
    check(len(k5.edges()) == 10, "K5 edge list")

    check(w6.emit_graph6(k5) == "D~{", "graph6 emit")
    check(w6.parse_graph6("D~{") == k5, "graph6 parse + iso equality")
    try:
        w6.parse_graph6("D~")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed graph6 must raise")

    c27 = w6.squared_cycle(7)
    relabeled = w6.Graph(5, [(4 - u, 4 - v) for u, v in k5.edges()])
    check(w6.canonical_form(relabeled) == w6.canonical_form(k5), "canonical form invariance")
    check(w6.is_isomorphic(w6.squared_cycle(5), k5), "C2_5 = K5")
    check(w6.vertex_connectivity(c27) == 4, "connectivity")
    check(w6.is_k_connected(c27, 4), "is_k_connected")
    check(not w6.is_planar(k5), "planarity")
    check(w6.is_cyclically_4_connected_cubic(w6.special("petersen")), "cyclic connectivity")

    check(w6.has_minor(w6.complete(7), w6.wheel_w6()), "K7 has W6")
    check(not w6.has_minor(k5, w6.wheel_w6()), "K5 has no W6")
    model = w6.find_minor_model(w6.special("petersen"), w6.complete(5))
    check(model is not None and len(model) == 5, "minor model branch sets")
    check(w6.is_w6_minor_free(w6.squared_cycle(8)), "C2_8 free")
    check(not w6.is_w6_minor_free(w6.squared_cycle(9)), "C2_9 not free")

    cycle = w6.find_hamiltonian_cycle(k5)
    check(cycle is not None and len(cycle) == 5, "hamilton cycle")
    check(w6.find_hamiltonian_cycle(w6.special("petersen")) is None, "petersen")
    check(w6.chvatal_holds([4, 4, 4, 4, 4]), "degree criterion")

    cat = w6.catalog()
    check(len(cat) == 14, "catalog size")
    names = [name for name, _ in cat]
    check("DW_5" in names and "C2_8" in names, "catalog names")
    check(w6.catalog_lookup(w6.double_wheel(5)) == "DW_5", "catalog lookup")
    check(w6.catalog_lookup(w6.cycle(5)) is None, "lookup miss")

    splits = w6.enumerate_splits(w6.squared_cycle(5), True)
    check(len(splits) == 3, "K5 splits")
    lg = w6.line_graph(w6.special("k33"))
    check(lg.order == 9, "line graph")
    root = w6.root_graph_cubic(lg)
    check(root is not None and w6.is_isomorphic(root, w6.special("k33")), "root recovery")
    cubics = w6.generate_cyclically_4conn_cubic(8)
    check(len(cubics) == 3, "cubic generation")
    chain = w6.chain_decompose(w6.complete(6))
    check(len(chain) >= 2, "chain length")
    check(len(w6.enumerate_graphs(6, 0)) == 156, "census")

    result = w6.verify_theorem(7)
    check(result["ok"], "theorem at order 7")
    check("result: ok" in result["report"], "report text")

    check(w6.emit_dot(w6.cycle(3), "tri").count("--") == 3, "dot output")
    check("Graph" in repr(k5), "repr")

    print("python smoke: all checks pass")
    return 0


if __name__ == "__main__":
    sys.exit(main())
