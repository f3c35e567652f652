#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "apollonian/config.hpp"
#include "apollonian/forms.hpp"
#include "apollonian/group.hpp"
#include "apollonian/io.hpp"
#include "apollonian/moebius.hpp"
#include "apollonian/packing.hpp"
#include "apollonian/render.hpp"
#include "apollonian/schottky.hpp"

namespace ap = apollonian;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

int cmd_validate(const std::string& path) {
    ap::Mat4Q w;
    try {
        w = ap::io::load_config(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    try {
        ap::config::ConfigClass cls = ap::config::validate_acc(w);
        ap::packing::IntegralityReport ir = ap::packing::is_strongly_integral(w);
        std::cout << "valid Descartes configuration\n"
                  << "det sign: " << (cls.det_sign > 0 ? "+8" : "-8") << "\n"
                  << "total orientation: " << (cls.total_orientation > 0 ? "+1" : "-1")
                  << "\n"
                  << "strongly integral: "
                  << (ir.curvature_center_integral ? "true" : "false") << "\n"
                  << "co-curvature column integral: "
                  << (ir.co_curvature_integral ? "true" : "false") << "\n";
        ap::Vec4Q b = ap::config::curvatures(w);
        std::cout << "curvatures:";
        for (const auto& q : b) std::cout << " " << ap::to_string(q);
        std::cout << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kExitInvalid;
    }
}

int cmd_generate(const std::string& seed_path, const std::string& kind_name, int depth,
                 const std::string& out_path) {
    ap::Mat4Q seed;
    try {
        seed = ap::io::load_config(seed_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    try {
        ap::packing::Kind kind = ap::packing::kind_from_name(kind_name);
        ap::packing::Packing p = ap::packing::generate(seed, kind, depth);
        if (p.seed_negated)
            std::cout << "warning: seed had negative orientation, negated\n";
        std::cout << "configurations: "
                  << (p.configs_stored ? std::to_string(p.configs.size()) : "(not stored)")
                  << "\n"
                  << "circles: " << p.circles.size() << "\n";
        if (kind == ap::packing::Kind::Apollonian) {
            long pow3 = 1;
            for (int m = 0; m < depth; ++m) pow3 *= 3;
            long expected = 2 * (pow3 + 1);
            std::cout << "expected 2(3^m+1): " << expected
                      << (static_cast<long>(p.circles.size()) == expected ? " (match)"
                                                                          : " (MISMATCH)")
                      << "\n";
        }
        if (!out_path.empty()) ap::io::save_packing(p, out_path);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Descartes configurations, Apollonian packings, and the groups acting on them"};
    app.require_subcommand(1);

    std::string path, out, kind = "apollonian", word, viewport;
    int depth = 3, length = 2;
    bool list_words = false, labels = false, verify = false;
    double stroke = 0.005;
    int checks = 50;
    std::string translate, dilate;

    auto* validate = app.add_subcommand("validate", "classify a configuration file");
    validate->add_option("file", path)->required();

    auto* generate = app.add_subcommand("generate", "expand a packing orbit");
    generate->add_option("seed", path)->required();
    generate->add_option("--kind", kind, "apollonian|dual|super");
    generate->add_option("--depth", depth);
    generate->add_option("--out", out);

    auto* rendercmd = app.add_subcommand("render", "emit an SVG for a packing file");
    rendercmd->add_option("packing", path)->required();
    rendercmd->add_option("--out", out)->required();
    rendercmd->add_option("--viewport", viewport, "xmin,ymin,xmax,ymax");
    rendercmd->add_flag("--labels", labels, "integer curvature labels");
    rendercmd->add_option("--stroke", stroke);

    auto* words = app.add_subcommand("words", "count normal-form words");
    words->add_option("--length", length)->required();
    words->add_flag("--list", list_words);

    auto* reduce = app.add_subcommand("reduce", "normal form and matrix of a word");
    reduce->add_option("word", word)->required()->expected(1);
    reduce->allow_extras(false);

    auto* spectrum = app.add_subcommand("spectrum", "curvature spectrum CSV");
    spectrum->add_option("packing", path)->required();
    spectrum->add_option("--out", out);

    auto* dim = app.add_subcommand("dim", "curvature-count exponent estimate");
    dim->add_option("packing", path)->required();

    auto* moebius = app.add_subcommand("moebius", "apply or property-check the right action");
    moebius->add_option("--translate", translate, "x,y (exact rationals)");
    moebius->add_option("--dilate", dilate, "r (exact rational, > 0)");
    moebius->add_option("--apply", path, "configuration file to act on");
    moebius->add_option("--out", out);
    moebius->add_option("--check", checks, "random homomorphism/Wilker samples");

    auto* schottky = app.add_subcommand("schottky", "limit-set samples and relation checks");
    schottky->add_option("--depth", depth);
    schottky->add_option("--out", out);
    schottky->add_flag("--verify", verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(path);
        if (*generate) return cmd_generate(path, kind, depth, out);
        if (*rendercmd) {
            ap::packing::Packing p = ap::io::load_packing(path);
            ap::render::RenderSpec spec;
            spec.curvature_labels = labels;
            spec.stroke_width = stroke;
            if (!viewport.empty()) {
                ap::render::Viewport v;
                if (std::sscanf(viewport.c_str(), "%lf,%lf,%lf,%lf", &v.xmin, &v.ymin,
                                &v.xmax, &v.ymax) != 4)
                    throw std::invalid_argument("viewport must be xmin,ymin,xmax,ymax");
                spec.viewport = v;
            }
            ap::io::write_file(out, ap::render::packing_to_svg(p, spec));
            std::cout << "wrote " << out << "\n";
            return kExitOk;
        }
        if (*words) {
            int cap = 8;
            if (const char* env = std::getenv("APOLLONIAN_DEPTH_CAP")) cap = std::atoi(env);
            auto all = ap::group::enumerate_normal_forms(length, cap);
            std::cout << all.size() << "\n";
            if (list_words)
                for (const auto& w : all) std::cout << ap::group::word_to_string(w) << "\n";
            return kExitOk;
        }
        if (*reduce) {
            ap::group::Word w = ap::group::parse_word(word);
            ap::group::Word nf = ap::group::normal_form(w);
            std::cout << ap::group::word_to_string(nf) << "\n";
            std::cout << ap::group::word_to_matrix(nf).to_string() << "\n";
            return kExitOk;
        }
        if (*spectrum) {
            ap::packing::Packing p = ap::io::load_packing(path);
            std::string csv = ap::io::spectrum_to_csv(p);
            if (out.empty())
                std::cout << csv;
            else
                ap::io::write_file(out, csv);
            return kExitOk;
        }
        if (*dim) {
            ap::packing::Packing p = ap::io::load_packing(path);
            double est = ap::packing::estimate_residual_dimension(p);
            std::cout << "curvature-count exponent: " << est << "\n";
            return kExitOk;
        }
        if (*moebius) {
            if (!path.empty()) {
                ap::Mat4Q w = ap::io::load_config(path);
                ap::Mat4Q m = ap::Mat4Q::identity();
                if (!translate.empty()) {
                    auto comma = translate.find(',');
                    if (comma == std::string::npos)
                        throw std::invalid_argument("--translate needs x,y");
                    m = m * ap::moebius::translation_matrix_exact(
                                ap::parse_rational(translate.substr(0, comma)),
                                ap::parse_rational(translate.substr(comma + 1)));
                }
                if (!dilate.empty())
                    m = m * ap::moebius::dilation_matrix_exact(ap::parse_rational(dilate),
                                                               1, 0);
                ap::Mat4Q acted = w * m;
                ap::config::validate_acc(acted);
                std::string text = ap::io::config_to_json(acted);
                if (out.empty())
                    std::cout << text;
                else
                    ap::io::write_file(out, text);
                return kExitOk;
            }
            std::mt19937_64 rng(20250809);
            for (int s = 0; s < checks; ++s) {
                auto g = ap::moebius::random_conformal(rng);
                auto h = ap::moebius::random_conformal(rng);
                auto vg = ap::moebius::moebius_to_autqw(g);
                auto vh = ap::moebius::moebius_to_autqw(h);
                auto vgh = ap::moebius::moebius_to_autqw(ap::moebius::compose(g, h));
                double scale = std::max(1.0, (vg * vh).max_abs());
                if (vgh.max_abs_diff(vg * vh) > 1e-9 * scale)
                    throw std::runtime_error("homomorphism check failed");
                auto wl = ap::moebius::wilker_lorentz_map(g);
                if (ap::moebius::congruence_error(wl, ap::forms::q_lorentz()) >
                    1e-9 * wl.max_abs() * wl.max_abs())
                    throw std::runtime_error("Wilker image left O(3,1)");
            }
            auto chain = ap::moebius::verify_conjugacy_chain(checks, 20250810);
            if (!chain.ok) throw std::runtime_error(chain.detail);
            std::cout << "moebius checks passed (" << checks << " samples)\n";
            return kExitOk;
        }
        if (*schottky) {
            if (verify) {
                auto rel = ap::schottky::verify_relations();
                if (!rel.ok) throw std::runtime_error(rel.detail);
                auto geo = ap::schottky::verify_inversion_geometry();
                if (!geo.ok) throw std::runtime_error(geo.detail);
                std::cout << "relations exact; s_i fixes dual row:";
                for (int r : geo.fixed_dual_row) std::cout << " " << r;
                std::cout << "\ninduced left generators:";
                for (int r : geo.induced_generator) std::cout << " S" << r;
                std::cout << "\n";
            }
            if (!out.empty() || !verify) {
                auto sample = ap::schottky::sample_limit_set(depth);
                std::string csv = ap::io::points_to_csv(sample.points, sample.words);
                if (out.empty())
                    std::cout << csv;
                else
                    ap::io::write_file(out, csv);
            }
            return kExitOk;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
