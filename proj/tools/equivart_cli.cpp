// Command-line front end: closed-form rings and scale barcodes, the explicit
// quotient/join maps on exact-rational measures, and the brute-force
// persistence oracle on evenly spaced circle samples.

#include "equivart/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace equivart;

// Scales are rational turns "p/q", or float radians snapped to a nearby
// rational; turns keep the critical-scale comparisons exact.
Rational parse_scale(const std::string& text) {
    Rational r;
    if (text.find('/') != std::string::npos) {
        r = parse_rational(text);
    } else {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("malformed scale: " + text);
        r = turns_from_radians(v);
    }
    if (r < 0) throw std::invalid_argument("scale must be nonnegative");
    return r;
}

CircleMeasure load_measure(const std::string& path) {
    Json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open measure file: " + path);
        in >> j;
    }
    return measure_from_json(j);
}

long simplex_budget() {
    if (const char* env = std::getenv("EQUIVART_MAX_SIMPLICES")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return kDefaultSimplexBudget;
}

void write_file_or_stdout(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

Json with_schema(Json j) {
    Json out{{"schema", kSchemaTag}};
    for (auto& [key, value] : j.items()) out[key] = value;
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

struct Options {
    std::string r_text, rmax_text = "1/2", measure_path, other_path, coeff = "Z", field = "f2";
    std::string filtration_out;
    int degree = 0, n = 0, d = 0, max_dim = 1, cover = 3;
    bool csv = false;
};

CoefField parse_oracle_field(const std::string& s) {
    if (s == "f2" || s == "F2") return CoefField::F2;
    if (s == "q" || s == "Q") return CoefField::Q;
    throw std::invalid_argument("field must be f2 or q");
}

int run(int argc, char** argv) {
    CLI::App app{"Persistent circle-equivariant cohomology of Vietoris-Rips thickenings of the circle"};
    app.require_subcommand(1);
    Options opt;

    auto* ring_cmd = app.add_subcommand("ring", "Equivariant cohomology ring at a scale");
    ring_cmd->add_option("--r", opt.r_text, "scale: rational turns p/q or float radians")->required();
    ring_cmd->add_option("--coeff", opt.coeff, "coefficients: Z (default), Q, R, F2, F3");

    auto* barcode_cmd = app.add_subcommand("barcode", "Degreewise barcode over the scale axis");
    barcode_cmd->add_option("--degree", opt.degree, "even cohomological degree")->required();
    barcode_cmd->add_option("--rmax", opt.rmax_text, "clip intervals starting beyond this scale");
    barcode_cmd->add_flag("--csv", opt.csv, "emit CSV instead of JSON");

    auto* phi_cmd = app.add_subcommand("phi", "Join coordinates of a measure");
    phi_cmd->add_option("--measure", opt.measure_path, "measure JSON file ('-' for stdin)")->required();
    phi_cmd->add_option("--r", opt.r_text, "scale")->required();

    auto* avg_cmd = app.add_subcommand("average", "Regular polygonal average of a measure");
    avg_cmd->add_option("--measure", opt.measure_path, "measure JSON file")->required();
    avg_cmd->add_option("--r", opt.r_text, "scale")->required();

    auto* quot_cmd = app.add_subcommand("quotient-eq", "Whether two measures share the same average");
    quot_cmd->add_option("--measure", opt.measure_path, "first measure JSON file")->required();
    quot_cmd->add_option("--with", opt.other_path, "second measure JSON file")->required();
    quot_cmd->add_option("--r", opt.r_text, "scale")->required();

    auto* gn_cmd = app.add_subcommand("gn", "Pullback of a measure along the n-sheeted cover");
    gn_cmd->add_option("--measure", opt.measure_path, "measure JSON file")->required();
    gn_cmd->add_option("--n", opt.n, "odd cover degree")->required();

    auto* square_cmd = app.add_subcommand("square", "Check the cover square on a measure");
    square_cmd->add_option("--measure", opt.measure_path, "measure JSON file")->required();
    square_cmd->add_option("--r", opt.r_text, "scale")->required();
    square_cmd->add_option("--cover", opt.cover, "odd cover degree")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Persistence barcode of the sampled circle");
    oracle_cmd->add_option("--n", opt.n, "number of evenly spaced vertices")->required();
    oracle_cmd->add_option("--maxdim", opt.max_dim, "top simplex dimension retained")->required();
    oracle_cmd->add_option("--field", opt.field, "f2 (default) or q");
    oracle_cmd->add_flag("--csv", opt.csv, "emit CSV instead of JSON");
    oracle_cmd->add_option("--filtration-out", opt.filtration_out, "also export the filtration as text");

    auto* fixed_cmd = app.add_subcommand("fixed", "Cyclic fixed subcomplex summary");
    fixed_cmd->add_option("--n", opt.n, "number of vertices")->required();
    fixed_cmd->add_option("--d", opt.d, "divisor of n: order of the cyclic subgroup")->required();
    fixed_cmd->add_option("--maxdim", opt.max_dim, "top simplex dimension (default 2d-1)");
    fixed_cmd->add_option("--filtration-out", opt.filtration_out, "export the invariant simplices as text");

    auto* compare_cmd = app.add_subcommand("compare", "Oracle Betti numbers vs the closed form");
    compare_cmd->add_option("--n", opt.n, "number of vertices")->required();
    compare_cmd->add_option("--r", opt.r_text, "scale")->required();
    compare_cmd->add_option("--maxdim", opt.max_dim, "top simplex dimension retained")->required();
    compare_cmd->add_option("--field", opt.field, "f2 (default) or q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(with_schema(Json{{"error", Json{{"type", "flags"}, {"message", e.what()}}}}));
        return 2;
    }

    try {
        if (ring_cmd->parsed()) {
            Rational r = parse_scale(opt.r_text);
            GradedRing ring = vr_ring(r);
            Json out{{"command", "ring"},
                     {"r_turns", format_rational(r)},
                     {"r_radians", to_double(r) * kTwoPi}};
            auto band = band_index(r);
            out["band"] = band ? Json(*band) : Json("pt");
            out["integral_ring"] = ring.str();
            if (opt.coeff == "Z") {
                out["ring"] = ring.str();
            } else {
                Field f;
                if (opt.coeff == "Q") f = Field::Q;
                else if (opt.coeff == "R") f = Field::R;
                else if (opt.coeff == "F2") f = Field::F2;
                else if (opt.coeff == "F3") f = Field::F3;
                else throw std::invalid_argument("unknown coefficient field: " + opt.coeff);
                out["coefficients"] = field_name(f);
                out["ring"] = specialize(ring, f).str();
            }
            emit(with_schema(out));
        } else if (barcode_cmd->parsed()) {
            auto intervals = barcode_over_scale(opt.degree, parse_scale(opt.rmax_text));
            if (opt.csv) {
                std::cout << scale_barcode_to_csv(intervals);
            } else {
                Json ivs = Json::array();
                for (const auto& iv : intervals) ivs.push_back(scale_interval_to_json(iv));
                emit(with_schema(Json{{"command", "barcode"}, {"degree", opt.degree}, {"intervals", ivs}}));
            }
        } else if (phi_cmd->parsed()) {
            Rational r = parse_scale(opt.r_text);
            JoinPoint p = phi(load_measure(opt.measure_path), r);
            Json out{{"command", "phi"}, {"r_turns", format_rational(r)}};
            out["join_point"] = join_point_to_json(p);
            emit(with_schema(out));
        } else if (avg_cmd->parsed()) {
            Rational r = parse_scale(opt.r_text);
            RegularPolygonalMeasure rpm = average(load_measure(opt.measure_path), r);
            Json out{{"command", "average"}, {"r_turns", format_rational(r)}};
            out["polygon"] = polygon_to_json(rpm);
            out["measure"] = measure_to_json(rpm.to_measure());
            emit(with_schema(out));
        } else if (quot_cmd->parsed()) {
            Rational r = parse_scale(opt.r_text);
            CircleMeasure a = load_measure(opt.measure_path);
            CircleMeasure b = load_measure(opt.other_path);
            Json out{{"command", "quotient-eq"},
                     {"r_turns", format_rational(r)},
                     {"equal", quotient_eq(a, b, r)}};
            out["average_a"] = polygon_to_json(average(a, r));
            out["average_b"] = polygon_to_json(average(b, r));
            emit(with_schema(out));
        } else if (gn_cmd->parsed()) {
            CircleMeasure image = g_n(load_measure(opt.measure_path), opt.n);
            Json out{{"command", "gn"}, {"n", opt.n}};
            out["measure"] = measure_to_json(image);
            emit(with_schema(out));
        } else if (square_cmd->parsed()) {
            Rational r = parse_scale(opt.r_text);
            CircleMeasure mu = load_measure(opt.measure_path);
            CommutingSquare sq = commuting_square(mu, r, opt.cover);
            Json out{{"command", "square"},
                     {"cover", opt.cover},
                     {"r_turns", format_rational(r)},
                     {"cover_scale_turns", format_rational(cover_scale(r, opt.cover))}};
            out["via_cover"] = join_point_to_json(sq.via_cover);
            out["via_embed"] = join_point_to_json(sq.via_embed);
            out["equal"] = sq.equal;
            emit(with_schema(out));
        } else if (oracle_cmd->parsed()) {
            Filtration f = build_filtration(opt.n, opt.max_dim, simplex_budget());
            if (!opt.filtration_out.empty()) {
                std::ostringstream os;
                export_filtration_text(f, os);
                write_file_or_stdout(opt.filtration_out, os.str());
            }
            Barcode bc = persistent_homology(f, parse_oracle_field(opt.field));
            if (opt.csv) {
                std::cout << barcode_to_csv(bc);
            } else {
                Json out{{"command", "oracle"}, {"field", opt.field}};
                out["barcode"] = barcode_to_json(bc);
                emit(with_schema(out));
            }
        } else if (fixed_cmd->parsed()) {
            if (!fixed_cmd->count("--maxdim")) opt.max_dim = 2 * opt.d - 1;
            Filtration f = fixed_subcomplex(opt.n, opt.d, opt.max_dim, simplex_budget());
            if (!opt.filtration_out.empty()) {
                std::ostringstream os;
                export_filtration_text(f, os);
                write_file_or_stdout(opt.filtration_out, os.str());
            }
            Rational first = first_fixed_scale_turns(opt.n, opt.d);
            Json out{{"command", "fixed"},
                     {"n", opt.n},
                     {"d", opt.d},
                     {"first_fixed_scale_turns", format_rational(first)},
                     {"first_fixed_scale_radians", to_double(first) * kTwoPi},
                     {"orbit_size", opt.d},
                     {"orbit_count", opt.n / opt.d},
                     {"invariant_simplices", f.simplices.size()},
                     {"max_dim", opt.max_dim}};
            if (!f.simplices.empty()) {
                Rational min_val = f.value_turns(0);
                for (size_t j = 1; j < f.simplices.size(); ++j)
                    if (f.value_turns(j) < min_val) min_val = f.value_turns(j);
                out["min_value_turns"] = format_rational(min_val);
            }
            emit(with_schema(out));
        } else if (compare_cmd->parsed()) {
            TheoryComparison rep = compare_with_theory(opt.n, parse_scale(opt.r_text), opt.max_dim,
                                                       parse_oracle_field(opt.field), simplex_budget());
            Json rep_json = comparison_to_json(rep);
            Json out{{"command", "compare"}};
            for (auto& [key, value] : rep_json.items()) out[key] = value;
            emit(with_schema(out));
        }
    } catch (const std::exception& e) {
        emit(with_schema(Json{{"error", Json{{"type", "domain"}, {"message", e.what()}}}}));
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
