#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhg/constructions.hpp"
#include "bhg/field.hpp"
#include "bhg/group.hpp"
#include "bhg/search.hpp"
#include "bhg/setfile.hpp"
#include "bhg/verifier.hpp"

using json = nlohmann::json;

namespace {

// Exit codes: 0 success/pass, 1 domain failure, 2 usage/parse, 3 budget.
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<int64_t> parse_int_list(const std::string& s) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoll(part));
    if (out.empty()) throw bhg::ParseError("empty list: " + s);
    return out;
}

// Field-element flag: a bare integer (constant element / value for n = 1) or
// a high-to-low coefficient tuple.
bhg::FieldElement parse_element_flag(const bhg::FieldSpec& spec, const std::string& s) {
    auto nums = parse_int_list(s);
    if (static_cast<int>(nums.size()) == spec.n) {
        for (int64_t& c : nums) c %= spec.p;
        for (int64_t& c : nums)
            if (c < 0) c += spec.p;
        return bhg::devectorize(spec, nums);
    }
    if (nums.size() == 1) {
        int64_t v = nums[0] % spec.p;
        if (v < 0) v += spec.p;
        auto e = bhg::fe_zero(spec);
        e.coeffs.back() = v;
        return e;
    }
    throw bhg::ParseError("field element needs 1 or n coordinates: " + s);
}

bhg::SetFile read_input(const std::string& path) {
    if (path == "-" || path.empty()) return bhg::parse_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw bhg::ParseError("cannot open input file: " + path);
    return bhg::parse_stream(in);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// Factor a prime power; throws if q is not one.
std::pair<int64_t, int> prime_power(int64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    int64_t p = q;
    for (int64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    int n = 0;
    int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, n};
}

struct Options {
    int64_t p = 0, q = 0, m = 0, g = 1, N = 0, base = 0, budget = 0;
    int n = 1, h = 2, d = 0, dim = 0, count = 0, threads = 1;
    std::string modulus, input, output, coeffs, divisors, group;
    std::string alpha, beta, a;
    bool vectorize = false, emit_json = false;
    bool g_set = false;
};

// Accepts either the high-to-low tail (c_{n-1},...,c_0) or the full monic
// polynomial (1, c_{n-1}, ..., c_0).
std::optional<std::vector<int64_t>> modulus_flag(const Options& opt, int n) {
    if (opt.modulus.empty()) return std::nullopt;
    auto nums = parse_int_list(opt.modulus);
    if (static_cast<int>(nums.size()) == n + 1 && nums.front() == 1)
        nums.erase(nums.begin());
    return nums;
}

int run_field_info(const Options& opt) {
    auto spec = bhg::FieldSpec::make(opt.p, opt.n, modulus_flag(opt, opt.n));
    std::cout << "p=" << spec.p << "\n";
    std::cout << "n=" << spec.n << "\n";
    std::cout << "order=" << spec.order() << "\n";
    std::cout << "modulus=";
    for (size_t i = 0; i < spec.modulus.size(); ++i)
        std::cout << (i ? "," : "") << spec.modulus[i];
    std::cout << "\n";
    auto prim = bhg::find_primitive(spec);
    std::cout << "primitive=" << bhg::fe_to_string(spec, prim) << "\n";
    return 0;
}

int run_construct_moment(const Options& opt) {
    auto spec = bhg::FieldSpec::make(opt.p, opt.n, modulus_flag(opt, opt.n));
    if (opt.vectorize || spec.n == 1) {
        auto cs = bhg::moment_curve(spec, opt.h);
        bhg::SetFile file;
        file.set = cs.set;
        file.construction = cs.cert.construction + " " + cs.cert.params;
        write_output(opt.output, bhg::render(file));
    } else {
        auto rows = bhg::moment_curve_rows(spec, opt.h);
        auto file = bhg::setfile_from_field_rows(spec, opt.h, std::move(rows), 1,
                                                 "moment p=" + std::to_string(spec.p) +
                                                     ",n=" + std::to_string(spec.n) +
                                                     ",h=" + std::to_string(opt.h));
        write_output(opt.output, bhg::render(file));
    }
    return 0;
}

int run_construct_digits(const Options& opt) {
    auto in = read_input(opt.input);
    auto cs = bhg::base_digits(in.set, opt.base, opt.dim);
    bhg::SetFile file;
    file.set = cs.set;
    file.construction = cs.cert.construction + " " + cs.cert.params;
    write_output(opt.output, bhg::render(file));
    return 0;
}

int run_construct_union(const Options& opt) {
    auto in = read_input(opt.input);
    auto cs = bhg::translate_union(in.set, opt.m, parse_int_list(opt.coeffs));
    bhg::SetFile file;
    file.set = cs.set;
    file.construction = cs.cert.construction + " " + cs.cert.params;
    write_output(opt.output, bhg::render(file));
    return 0;
}

int run_construct_reduce(const Options& opt) {
    auto in = read_input(opt.input);
    auto res = bhg::modular_reduce(in.set, parse_int_list(opt.divisors));
    bhg::SetFile file;
    file.set = res.out.set;
    file.construction = res.out.cert.construction + " " + res.out.cert.params;
    std::string text = "# reduced from group=" + in.set.spec.to_string() +
                       "\n# collisions=" + std::to_string(res.collisions) + "\n" +
                       bhg::render(file);
    write_output(opt.output, text);
    return 0;
}

int run_construct_golomb(const Options& opt) {
    auto [p, n] = prime_power(opt.q);
    auto spec = bhg::FieldSpec::make(p, n, modulus_flag(opt, n));
    auto alpha = parse_element_flag(spec, opt.alpha);
    auto beta = parse_element_flag(spec, opt.beta);
    auto a = parse_element_flag(spec, opt.a);
    auto cs = bhg::golomb_set(spec, alpha, beta, a);
    bhg::SetFile file;
    file.set = cs.set;
    file.construction = cs.cert.construction + " " + cs.cert.params;
    write_output(opt.output, bhg::render(file));
    return 0;
}

int run_verify(const Options& opt) {
    auto in = read_input(opt.input);
    int64_t budget = opt.budget > 0 ? opt.budget : bhg::kDefaultBudget;
    auto profile = bhg::rep_profile(in.set, opt.h, budget, opt.threads);
    int64_t claimed = opt.g_set ? opt.g : in.set.g.value_or(0);
    bool has_claim = opt.g_set || in.set.g.has_value();
    bool pass = !has_claim || profile.max_count <= claimed;

    if (opt.emit_json) {
        json j;
        j["h"] = opt.h;
        j["min_g"] = profile.max_count;
        j["convention"] = "multiset-repetition";
        if (has_claim) {
            j["claimed_g"] = claimed;
            j["pass"] = pass;
        }
        if (profile.max_count > 1) {
            json w;
            w["sum"] = profile.witness_sum;
            w["representations"] = profile.witness_reps;
            j["witness"] = w;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "h=" << opt.h << "\n";
        std::cout << "min_g=" << profile.max_count << "\n";
        std::cout << "convention=multiset-repetition\n";
        if (profile.max_count > 1) {
            std::cout << "witness_sum=";
            for (size_t i = 0; i < profile.witness_sum.size(); ++i)
                std::cout << (i ? "," : "") << profile.witness_sum[i];
            std::cout << "\n";
            for (const auto& rep : profile.witness_reps) {
                std::cout << "witness_rep=";
                for (size_t r = 0; r < rep.size(); ++r) {
                    if (r) std::cout << " + ";
                    for (size_t i = 0; i < rep[r].size(); ++i)
                        std::cout << (i ? "," : "") << rep[r][i];
                }
                std::cout << "\n";
            }
        }
        if (has_claim)
            std::cout << "claimed_g=" << claimed << "\nresult=" << (pass ? "pass" : "fail")
                      << "\n";
    }
    return pass ? 0 : kExitDomain;
}

int run_search_max(const Options& opt) {
    auto spec = bhg::GroupSpec::parse(opt.group);
    int64_t budget = opt.budget > 0 ? opt.budget : bhg::kDefaultSearchBudget;
    auto res = bhg::exhaustive_max(spec, opt.h, opt.g, budget, opt.threads);
    if (opt.emit_json) {
        json j;
        j["group"] = spec.to_string();
        j["h"] = opt.h;
        j["g"] = opt.g;
        j["best_size"] = res.best_size;
        j["exhaustive"] = res.exhaustive;
        j["nodes"] = res.nodes_explored;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group=" << spec.to_string() << "\n";
        std::cout << "h=" << opt.h << "\n";
        std::cout << "g=" << opt.g << "\n";
        std::cout << "best_size=" << res.best_size << "\n";
        std::cout << "exhaustive=" << (res.exhaustive ? "true" : "false") << "\n";
        std::cout << "nodes=" << res.nodes_explored << "\n";
    }
    // Timing goes to stderr so stdout stays byte-stable across runs.
    std::cerr << "elapsed_s=" << res.elapsed_seconds << "\n";
    if (!opt.output.empty()) {
        bhg::SetFile file;
        file.set = res.witness;
        file.construction = "search max";
        write_output(opt.output, bhg::render(file));
    }
    return 0;
}

int run_search_greedy(const Options& opt) {
    auto set = bhg::greedy_bhg(opt.h, opt.g, opt.count);
    if (opt.emit_json) {
        json j;
        j["h"] = opt.h;
        j["g"] = opt.g;
        std::vector<int64_t> vals;
        for (const auto& e : set.elements) vals.push_back(e[0]);
        j["elements"] = vals;
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < set.elements.size(); ++i)
            std::cout << (i ? " " : "") << set.elements[i][0];
        std::cout << "\n";
    }
    if (!opt.output.empty()) {
        bhg::SetFile file;
        file.set = set;
        file.construction = "search greedy";
        write_output(opt.output, bhg::render(file));
    }
    return 0;
}

int run_search_gap(const Options& opt) {
    int64_t budget = opt.budget > 0 ? opt.budget : bhg::kDefaultSearchBudget;
    auto rep = bhg::bound_gap_report(opt.N, opt.d, opt.h, opt.g, budget, opt.threads);
    int64_t line = rep.line.best_size, box = rep.box.best_size;
    if (opt.emit_json) {
        json j;
        j["N"] = opt.N;
        j["d"] = opt.d;
        j["h"] = opt.h;
        j["g"] = opt.g;
        j["line_max"] = line;
        j["box_max"] = box;
        j["gap"] = box - line;
        j["exhaustive"] = rep.line.exhaustive && rep.box.exhaustive;
        j["inequality_holds"] = rep.inequality_holds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "line_max=" << line << "\n";
        std::cout << "box_max=" << box << "\n";
        std::cout << "gap=" << (box - line) << "\n";
        std::cout << "exhaustive=" << (rep.line.exhaustive && rep.box.exhaustive ? "true" : "false")
                  << "\n";
        std::cout << "inequality_holds=" << (rep.inequality_holds ? "true" : "false") << "\n";
    }
    return rep.inequality_holds ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construction, verification, and exact search for B_h[g] sets"};
    app.require_subcommand(1);
    // "--h" is an option below, so help must not claim the short "-h".
    app.set_help_flag("--help", "print usage");
    app.option_defaults()->ignore_case(false);
    Options opt;

    auto* field = app.add_subcommand("field", "Finite-field utilities");
    auto* info = field->add_subcommand("info", "Describe GF(p^n)");
    info->add_option("--p", opt.p, "characteristic")->required();
    info->add_option("--n", opt.n, "extension degree");
    info->add_option("--modulus", opt.modulus, "modulus tail, high-to-low");

    auto* construct = app.add_subcommand("construct", "Emit a constructed set");
    auto* moment = construct->add_subcommand("moment", "Moment-curve B_h set");
    moment->set_help_flag("--help", "print usage");
    moment->add_option("--p", opt.p)->required();
    moment->add_option("--n", opt.n);
    moment->add_option("--h", opt.h)->required();
    moment->add_option("--modulus", opt.modulus);
    moment->add_flag("--vectorize", opt.vectorize, "emit coefficient vectors over Z_p");
    auto* digits = construct->add_subcommand("digits", "Base-N digit lifting");
    digits->add_option("--base", opt.base)->required();
    digits->add_option("--dim", opt.dim)->required();
    auto* uni = construct->add_subcommand("union", "Union of translates A + c*m");
    uni->add_option("--m", opt.m)->required();
    uni->add_option("--coeffs", opt.coeffs)->required();
    auto* reduce = construct->add_subcommand("reduce", "Coordinatewise modular reduction");
    reduce->add_option("--divisors", opt.divisors)->required();
    auto* golomb = construct->add_subcommand("golomb", "Golomb Sidon set on Z_{q-1} x Z_{q-1}");
    golomb->add_option("--q", opt.q)->required();
    golomb->add_option("--alpha", opt.alpha)->required();
    golomb->add_option("--beta", opt.beta)->required();
    golomb->add_option("--a", opt.a)->required();
    golomb->add_option("--modulus", opt.modulus);
    for (auto* sub : {digits, uni, reduce})
        sub->add_option("--input", opt.input, "set file, or - for stdin");
    for (auto* sub : {moment, digits, uni, reduce, golomb})
        sub->add_option("--output", opt.output, "write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Brute-force B_h[g] check");
    verify->set_help_flag("--help", "print usage");
    verify->add_option("--input", opt.input, "set file, or - for stdin");
    verify->add_option("--h", opt.h)->required();
    auto* verify_g = verify->add_option("--g", opt.g);
    verify->add_option("--budget", opt.budget);
    verify->add_option("--threads", opt.threads);
    verify->add_flag("--json", opt.emit_json);

    auto* search = app.add_subcommand("search", "Extremal-function search");
    auto* smax = search->add_subcommand("max", "Exact F_h(G, g)");
    smax->set_help_flag("--help", "print usage");
    smax->add_option("--group", opt.group, "product:... or box:d,N")->required();
    smax->add_option("--h", opt.h)->required();
    smax->add_option("--g", opt.g)->required();
    smax->add_option("--output", opt.output, "write witness set file");
    auto* sgreedy = search->add_subcommand("greedy", "Greedy B_h[g] prefix on Z+");
    sgreedy->set_help_flag("--help", "print usage");
    sgreedy->add_option("--h", opt.h)->required();
    sgreedy->add_option("--g", opt.g)->required();
    sgreedy->add_option("--count", opt.count)->required();
    sgreedy->add_option("--output", opt.output);
    auto* sgap = search->add_subcommand("gap", "Compare F_h(N^d, g) with F_h^d(N, g)");
    sgap->set_help_flag("--help", "print usage");
    sgap->add_option("--N", opt.N)->required();
    sgap->add_option("--d", opt.d)->required();
    sgap->add_option("--h", opt.h)->required();
    sgap->add_option("--g", opt.g)->required();
    for (auto* sub : {smax, sgap}) {
        sub->add_option("--budget", opt.budget);
        sub->add_option("--threads", opt.threads);
    }
    for (auto* sub : {smax, sgreedy, sgap}) sub->add_flag("--json", opt.emit_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    opt.g_set = verify_g->count() > 0;

    try {
        if (info->parsed()) return run_field_info(opt);
        if (moment->parsed()) return run_construct_moment(opt);
        if (digits->parsed()) return run_construct_digits(opt);
        if (uni->parsed()) return run_construct_union(opt);
        if (reduce->parsed()) return run_construct_reduce(opt);
        if (golomb->parsed()) return run_construct_golomb(opt);
        if (verify->parsed()) return run_verify(opt);
        if (smax->parsed()) return run_search_max(opt);
        if (sgreedy->parsed()) return run_search_greedy(opt);
        if (sgap->parsed()) return run_search_gap(opt);
    } catch (const bhg::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const bhg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
