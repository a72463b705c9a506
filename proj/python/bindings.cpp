#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sq/acceptance.hpp"
#include "sq/partitionfn.hpp"
#include "sq/roots.hpp"

namespace py = pybind11;
using namespace sq;

namespace {

using Rows = std::vector<std::vector<int>>;
using Cell = std::pair<int, int>;

BoxShape box_of(const std::tuple<int, int, int>& b) { return {std::get<0>(b), std::get<1>(b), std::get<2>(b)}; }

std::vector<HexCoord> cells_of(const std::vector<Cell>& cs) {
    std::vector<HexCoord> out;
    for (const auto& [u, v] : cs) out.push_back({u, v});
    return out;
}

py::list edge_list(const DoubleDimer& dd) {
    py::list out;
    for (const auto& [e, k] : dd.entries())
        out.append(py::make_tuple(py::make_tuple(Cell{e.a.u, e.a.v}, Cell{e.b.u, e.b.v}), k));
    return out;
}

template <class R>
std::vector<std::vector<std::string>> mat_text(const Mat2<R>& m) {
    return {{to_string(m.a), to_string(m.b)}, {to_string(m.c), to_string(m.d)}};
}

}  // namespace

PYBIND11_MODULE(_sq, m) {
    m.doc() = "squish map toolkit";

    py::register_exception<sq::Error>(m, "SqError", PyExc_ValueError);

    m.def("box_count", [](std::tuple<int, int, int> b) { return to_string(macmahon_box_count(box_of(b))); },
          "product formula count as a decimal string");
    m.def("enumerate_boxed", [](std::tuple<int, int, int> b) {
        std::vector<Rows> out;
        for (const auto& p : enumerate_boxed(box_of(b))) out.push_back(p.rows());
        return out;
    });
    m.def("colored_gf", [](std::tuple<int, int, int> b, int threads) { return colored_gf_box(box_of(b), threads).str(); },
          py::arg("box"), py::arg("threads") = 1);
    m.def("downsample", [](const Rows& rows) {
        auto [lo, hi] = downsample(PlanePartition(rows));
        return std::make_pair(lo.rows(), hi.rows());
    });
    m.def("squish", [](const Rows& rows, std::tuple<int, int, int> b) {
        return edge_list(squish_matching(matching_of(PlanePartition(rows), box_of(b))));
    });
    m.def("overlay", [](const Rows& a, const Rows& b, std::tuple<int, int, int> coarse) {
        BoxShape s = box_of(coarse);
        return edge_list(overlay(matching_of(PlanePartition(a), s), matching_of(PlanePartition(b), s)));
    });
    m.def("loop_trace", [](const std::vector<Cell>& cells) { return loop_trace(loop_around(cells_of(cells))).str(); },
          "trace in a, b, c around the boundary of the cells");
    m.def("loop_trace_rst", [](const std::vector<Cell>& cells) { return loop_trace_rst(loop_around(cells_of(cells))).str(); });
    m.def("monodromy_at", [](const std::vector<Cell>& cells, int n) {
        return mat_text(monodromy_at(loop_around(cells_of(cells)), n));
    });
    m.def("zq_series", [](int degree, std::vector<int> weights) { return zq_series({degree, std::move(weights)}).str(); },
          py::arg("degree"), py::arg("weights") = std::vector<int>{});
    m.def("conjecture_verdict", [](const std::vector<Cell>& cells, int margin) {
        auto v = conjecture_verdict(loop_around(cells_of(cells)), margin);
        py::dict d;
        d["id"] = v.id;
        d["tiling"] = status_name(v.tiling.status);
        d["classification"] = classification_name(v.classification);
        d["monodromy3"] = mat_text(v.monodromy3);
        d["parity_adjusted"] = v.parity_adjusted;
        if (v.tiling.certificate) d["stone_parity"] = v.tiling.certificate->stone_parity;
        return d;
    }, py::arg("cells"), py::arg("margin") = kDefaultMargin);
    m.def("run_criterion", [](int k, int cases) {
        AcceptanceOptions opt;
        opt.property_cases = cases;
        py::list out;
        for (const auto& c : run_criterion(k, opt)) out.append(py::make_tuple(c.id, c.pass, c.detail));
        return out;
    }, py::arg("k"), py::arg("cases") = 1000);
}
