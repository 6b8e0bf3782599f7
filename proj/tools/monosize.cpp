// monosize: size of monomial ideals under polarization and deformation.

#include "monosize/deformation.hpp"
#include "monosize/error.hpp"
#include "monosize/harness.hpp"
#include "monosize/polarization.hpp"
#include "monosize/report.hpp"
#include "monosize/size.hpp"
#include "monosize/text.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace monosize;

enum Exit : int { ok = 0, usage = 1, violation = 2, cap = 3 };

struct Options {
    std::string format = "json";
    std::optional<std::size_t> vars;
    std::string input;
    std::uint64_t seed = 0;
    bool covers = false;
    bool all = false;
    bool strong = false;
    std::string matrix;
    std::string eps;
    FuzzConfig fuzz;
};

std::string read_input(const std::string &input) {
    if (input == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    auto first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && input[first] == '(')
        return input;
    std::ifstream in(input);
    if (!in)
        throw Error(ErrorCode::invalid_argument,
                    "'" + input + "' is neither an ideal nor a readable file");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Runner {
  public:
    Runner(const Options &opt, const Caps &caps) : opt_(opt), caps_(caps) {}

    int run(const std::string &command) {
        if (command == "decompose")
            return decompose();
        if (command == "size")
            return size_cmd();
        if (command == "polarize")
            return polarize_cmd();
        if (command == "topbase")
            return topbase();
        if (command == "predict-eq")
            return predict();
        if (command == "verify-eq")
            return verify();
        if (command == "deform")
            return deform();
        if (command == "check-generic")
            return check_generic();
        if (command == "deform-size")
            return deform_size();
        if (command == "fuzz")
            return fuzz();
        if (command == "examples")
            return examples();
        throw Error(ErrorCode::invalid_argument, "unknown command " + command);
    }

  private:
    MonomialIdeal ideal() const { return parse_ideal(read_input(opt_.input), opt_.vars, caps_); }

    bool json() const { return opt_.format == "json"; }

    void emit(const Json &j, const std::string &text) const {
        if (json())
            std::cout << j.dump(2) << '\n';
        else
            std::cout << text;
    }

    int decompose() {
        auto d = irreducible_decomposition(ideal(), caps_);
        emit(to_json(d), to_text(d));
        return ok;
    }

    int size_cmd() {
        auto d = irreducible_decomposition(ideal(), caps_);
        auto r = size_of_decomposition(d);
        if (!opt_.covers) {
            emit(to_json(r), to_text(r));
            return ok;
        }
        auto f = minimal_covers(d, caps_);
        Json j = to_json(r);
        j["covers"] = to_json(f);
        emit(j, to_text(r, &f));
        return ok;
    }

    int polarize_cmd() {
        auto p = polarize(ideal(), caps_);
        emit(to_json(p), to_text(p));
        return ok;
    }

    int topbase() {
        PowerMatrix m;
        if (!opt_.matrix.empty()) {
            auto rows = Json::parse(opt_.matrix).get<std::vector<std::vector<Exponent>>>();
            m = PowerMatrix(rows);
        } else {
            m = PowerMatrix::of(irreducible_decomposition(ideal(), caps_));
        }
        std::vector<TopBase> bases;
        if (opt_.all)
            bases = enumerate_top_bases(m, caps_);
        else
            bases.push_back(build_top_base(m));
        Json j{{"matrix", matrix_json(m)}};
        if (opt_.all) {
            Json arr = Json::array();
            for (const auto &b : bases)
                arr.push_back(to_json(b));
            j["top_bases"] = arr;
        } else {
            j["top_base"] = to_json(bases.front());
        }
        emit(j, to_text(m, bases));
        return ok;
    }

    int predict() {
        auto v = predict_equality(irreducible_decomposition(ideal(), caps_), caps_);
        emit(to_json(v), to_text(v));
        return ok;
    }

    int verify() {
        const auto i = ideal();
        auto v = verify_equality(i, caps_);
        Json j = to_json(v);
        // Lower bounds on Stanley depth that hold when I is squarefree or the
        // equality characterization applies; no Stanley depth is computed.
        const bool applies = v.predicted || i.is_squarefree();
        j["sdepth_bound"] = Json{{"applies", applies},
                                 {"sdepth_I_at_least", v.actual->size_i + 1},
                                 {"sdepth_S_mod_I_at_least", v.actual->size_i}};
        emit(j, to_text(v));
        return v.agree() && v.actual->bound_holds && v.actual->bar_agrees ? ok : violation;
    }

    int deform() {
        const auto i = ideal();
        auto eps = find_generic_deformation(i, opt_.seed);
        auto deformed = apply_deformation(i, eps);
        Json j{{"seed", opt_.seed},
               {"generators", render(i)},
               {"epsilon", deformation_json(eps)},
               {"deformed", render(deformed)},
               {"strongly_generic", is_strongly_generic(deformed)},
               {"generic", is_generic(deformed)}};
        std::ostringstream text;
        text << "I           " << render(i) << '\n'
             << "epsilon     " << deformation_json(eps).dump() << '\n'
             << "I_eps       " << render(deformed) << '\n';
        emit(j, text.str());
        return ok;
    }

    int check_generic() {
        const auto i = ideal();
        const bool strong = is_strongly_generic(i);
        const bool generic = is_generic(i);
        Json j = opt_.strong ? Json{{"strongly_generic", strong}}
                             : Json{{"generic", generic}, {"strongly_generic", strong}};
        std::ostringstream text;
        if (opt_.strong)
            text << "strongly generic  " << (strong ? "yes" : "no") << '\n';
        else
            text << "generic           " << (generic ? "yes" : "no") << '\n';
        emit(j, text.str());
        return ok;
    }

    int deform_size() {
        const auto i = ideal();
        auto eps = opt_.eps.empty() ? find_generic_deformation(i, opt_.seed)
                                    : deformation_from_json(opt_.eps);
        auto r = size_under_deformation(i, eps, caps_);
        Json j = to_json(r);
        j["epsilon"] = deformation_json(eps);
        if (!r.generic)
            j["warning"] = "deformation is not generic; the inequality is not claimed";
        emit(j, to_text(r));
        return r.generic && !r.inequality_holds ? violation : ok;
    }

    int fuzz() {
        auto r = run_fuzz(opt_.fuzz, caps_);
        Json j{{"seed", opt_.fuzz.seed},
               {"bounds",
                Json{{"max_vars", opt_.fuzz.bounds.max_vars},
                     {"max_generators", opt_.fuzz.bounds.max_generators},
                     {"max_exponent", opt_.fuzz.bounds.max_exponent}}}};
        j.update(to_json(r));
        emit(j, to_text(r));
        return r.ok() ? ok : violation;
    }

    int examples() {
        auto checks = run_examples(caps_);
        emit(to_json(checks), to_text(checks));
        bool pass = std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.pass; });
        return pass ? ok : violation;
    }

    const Options &opt_;
    const Caps &caps_;
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Lyubeznik size of monomial ideals under polarization and deformation"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--vars", opt.vars, "Ambient variable count (default: largest index used)");

    auto input_cmd = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("input", opt.input,
                        "Ideal, decomposition, file path, or '-' for stdin")
            ->required();
        return sub;
    };

    input_cmd("decompose", "Irredundant irreducible decomposition");
    input_cmd("size", "Size report")->add_flag("--covers", opt.covers, "Include the cover family");
    input_cmd("polarize", "Polarization and c = n' - n");
    auto *topbase = app.add_subcommand("topbase", "Top base of the power matrix");
    topbase->add_option("input", opt.input, "Ideal or decomposition");
    topbase->add_option("--matrix", opt.matrix, "Power matrix as JSON rows instead of an ideal");
    topbase->add_flag("--all", opt.all, "Enumerate every top base");
    input_cmd("predict-eq", "Predict whether size I^p = size I + c");
    input_cmd("verify-eq", "Prediction, computed sizes and agreement");
    input_cmd("deform", "Synthesize a strongly generic deformation")
        ->add_option("--seed", opt.seed, "Tie-breaking seed");
    input_cmd("check-generic", "Genericity test")
        ->add_flag("--strong", opt.strong, "Test the strong form only");
    auto *dsize = input_cmd("deform-size", "size I versus size I_eps");
    dsize->add_option("--eps", opt.eps, "Deformation as a JSON array of arrays");
    dsize->add_option("--seed", opt.seed, "Seed for a synthesized deformation");

    auto *fuzz = app.add_subcommand("fuzz", "Differential property checks on random ideals");
    fuzz->add_option("--seed", opt.fuzz.seed)->capture_default_str();
    fuzz->add_option("--count", opt.fuzz.count)->check(CLI::PositiveNumber)->capture_default_str();
    fuzz->add_option("--max-vars", opt.fuzz.bounds.max_vars)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz->add_option("--max-gens", opt.fuzz.bounds.max_generators)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz->add_option("--max-exp", opt.fuzz.bounds.max_exponent)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz->add_option("--skip", opt.fuzz.skip, "Property to leave out (repeatable)");
    app.add_subcommand("examples", "Replay the published worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        Caps caps;
        if (const char *env = std::getenv("MONOSIZE_CAPS"))
            caps = parse_caps(env);
        if (topbase->parsed() && opt.matrix.empty() && opt.input.empty())
            throw Error(ErrorCode::invalid_argument, "topbase needs an ideal or --matrix");
        Runner runner(opt, caps);
        return runner.run(app.get_subcommands().front()->get_name());
    } catch (const Error &e) {
        std::cerr << "monosize: " << to_string(e.code()) << ": " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::cap_exceeded:
            return cap;
        case ErrorCode::internal:
            return violation;
        default:
            return usage;
        }
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "monosize: invalid JSON: " << e.what() << '\n';
        return usage;
    }
}
