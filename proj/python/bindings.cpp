#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apollonian/config.hpp"
#include "apollonian/forms.hpp"
#include "apollonian/group.hpp"
#include "apollonian/io.hpp"
#include "apollonian/moebius.hpp"
#include "apollonian/packing.hpp"
#include "apollonian/render.hpp"
#include "apollonian/schottky.hpp"

namespace py = pybind11;
namespace ap = apollonian;

namespace {

// Rows cross the boundary as lists of exact "p/q" strings (or ints inside
// strings); geometry comes back as floats.
ap::Mat4Q mat_from_rows(const std::vector<std::vector<std::string>>& rows) {
    if (rows.size() != 4) throw std::invalid_argument("need 4 rows");
    ap::Mat4Q w;
    for (int i = 0; i < 4; ++i) {
        if (rows[i].size() != 4) throw std::invalid_argument("each row needs 4 entries");
        for (int j = 0; j < 4; ++j) w(i, j) = ap::parse_rational(rows[i][j]);
    }
    return w;
}

std::vector<std::vector<std::string>> rows_from_mat(const ap::Mat4Q& w) {
    std::vector<std::vector<std::string>> rows(4, std::vector<std::string>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows[i][j] = ap::to_string(w(i, j));
    return rows;
}

}  // namespace

PYBIND11_MODULE(_apollonian, m) {
    m.doc() = "exact Descartes configurations and Apollonian packings";

    m.def("validate", [](const std::vector<std::vector<std::string>>& rows) {
        ap::Mat4Q w = mat_from_rows(rows);
        ap::config::ConfigClass cls = ap::config::validate_acc(w);
        ap::packing::IntegralityReport ir = ap::packing::is_strongly_integral(w);
        py::dict out;
        out["det_sign"] = cls.det_sign;
        out["total_orientation"] = cls.total_orientation;
        out["strongly_integral"] = ir.curvature_center_integral;
        out["co_curvature_integral"] = ir.co_curvature_integral;
        return out;
    });

    m.def("dual", [](const std::vector<std::vector<std::string>>& rows) {
        return rows_from_mat(ap::config::dual_configuration(mat_from_rows(rows)));
    });

    m.def("lift_ccm", [](const std::vector<std::vector<std::string>>& rows) {
        if (rows.size() != 4) throw std::invalid_argument("need 4 rows");
        ap::Mat43Q ccm;
        for (int i = 0; i < 4; ++i) {
            if (rows[i].size() != 3) throw std::invalid_argument("each row needs 3 entries");
            for (int j = 0; j < 3; ++j) ccm(i, j) = ap::parse_rational(rows[i][j]);
        }
        return rows_from_mat(ap::config::lift_ccm_to_acc(ccm));
    });

    m.def("base_configuration", [] { return rows_from_mat(ap::forms::base_configuration_w0()); });
    m.def("schottky_configuration", [] { return rows_from_mat(ap::schottky::w_d0()); });

    m.def("circle_to_acc", [](const std::string& x, const std::string& y,
                              const std::string& r) {
        auto row = ap::circle::circle_to_acc({ap::parse_rational(x), ap::parse_rational(y)},
                                             ap::parse_rational(r));
        return std::vector<std::string>{ap::to_string(row[0]), ap::to_string(row[1]),
                                        ap::to_string(row[2]), ap::to_string(row[3])};
    });

    m.def("normal_form", [](const std::string& word) {
        return ap::group::word_to_string(ap::group::normal_form(ap::group::parse_word(word)));
    });

    m.def("word_matrix", [](const std::string& word) {
        ap::Mat4Q u = ap::group::word_to_matrix(ap::group::parse_word(word));
        std::vector<std::vector<long>> out(4, std::vector<long>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[i][j] = u(i, j).get_num().get_si();
        return out;
    });

    m.def("count_normal_forms", [](int n) {
        return ap::group::enumerate_normal_forms(n).size();
    });

    m.def(
        "generate",
        [](const std::vector<std::vector<std::string>>& rows, const std::string& kind,
           int depth) {
            ap::packing::Packing p =
                ap::packing::generate(mat_from_rows(rows), ap::packing::kind_from_name(kind), depth);
            py::dict out;
            out["circles"] = static_cast<long>(p.circles.size());
            out["depth"] = p.depth;
            out["kind"] = kind;
            bool integral = true;
            auto spectrum = ap::packing::curvature_spectrum(p, &integral);
            py::list spec;
            for (const auto& [b, count] : spectrum)
                spec.append(py::make_tuple(ap::to_string(b), count));
            out["spectrum"] = spec;
            out["all_curvatures_integral"] = integral;
            out["json"] = ap::io::packing_to_json(p);
            return out;
        },
        py::arg("rows"), py::arg("kind") = "apollonian", py::arg("depth") = 3);

    m.def("packing_svg", [](const std::string& packing_json) {
        return ap::render::packing_to_svg(ap::io::packing_from_json(packing_json));
    });

    m.def("residual_dimension", [](const std::string& packing_json) {
        return ap::packing::estimate_residual_dimension(ap::io::packing_from_json(packing_json));
    });

    m.def(
        "translate_config",
        [](const std::vector<std::vector<std::string>>& rows, const std::string& x,
           const std::string& y) {
            ap::Mat4Q w = mat_from_rows(rows);
            ap::Mat4Q v =
                ap::moebius::translation_matrix_exact(ap::parse_rational(x), ap::parse_rational(y));
            return rows_from_mat(w * v);
        });

    m.def("limit_set", [](int depth) {
        auto sample = ap::schottky::sample_limit_set(depth);
        std::vector<std::pair<std::complex<double>, std::string>> out;
        out.reserve(sample.points.size());
        for (std::size_t i = 0; i < sample.points.size(); ++i)
            out.emplace_back(sample.points[i], sample.words[i]);
        return out;
    });

    m.def("schottky_relations_ok", [] { return ap::schottky::verify_relations().ok; });
}
