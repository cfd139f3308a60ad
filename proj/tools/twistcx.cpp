// Command-line front end: reads and writes complex documents as JSON and
// prints one JSON report per run (CSV for rank-table).
//
// Exit codes: 0 success, 1 mathematical rejection, 2 usage error.

#include "twistcx/cover.hpp"
#include "twistcx/io.hpp"
#include "twistcx/normalizer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace twistcx;

namespace {

struct Failure {
    int code;
    std::string reason;
    std::string message;
    std::string location;
};

struct Globals {
    int n = 3;
    std::uint32_t characteristic = 32003;
    std::string betti0;
    std::uint64_t seed = 0;
    bool timing = false;
};

// FNV-1a, for a stable digest of the inputs.
class Digest {
public:
    void add(const std::string& s) {
        for (unsigned char ch : s) {
            h_ ^= ch;
            h_ *= 0x100000001b3ull;
        }
        h_ ^= 0xff;
        h_ *= 0x100000001b3ull;
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ull;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw Failure{2, "io", "cannot read " + path, path};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

CategoryPtr category_from(const Globals& g) {
    CategoryParams params;
    params.n = g.n;
    try {
        params.field = Field(g.characteristic);
        if (!g.betti0.empty()) params.betti0 = parse_betti(g.betti0).b;
    } catch (const std::exception& e) {
        throw Failure{2, "parameters", e.what(), ""};
    }
    if (auto problems = validate_params(params); !problems.empty())
        throw Failure{2, "parameters", problems.front(), ""};
    return Category::make(params);
}

// A complex given either as a document (--in) or as a shifted core (--core).
struct ComplexSource {
    std::string path;
    int core = -1;
    int position = 0;

    void attach(CLI::App* cmd, const std::string& flag = "--in") {
        cmd->add_option(flag, path, "complex document (\"-\" for stdin)");
        cmd->add_option("--core", core, "use the core Q0 or Q1 instead of a document")->check(CLI::Range(0, 1));
        cmd->add_option("--position", position, "position of the --core summand");
    }

    TwistedComplex load(const Globals& g, Digest& digest) const {
        if (path.empty() == (core < 0)) throw Failure{2, "usage", "give exactly one of --in and --core", ""};
        if (core >= 0) {
            digest.add("core " + std::to_string(core) + " " + std::to_string(position));
            return TwistedComplex::core(category_from(g), vertex_from_int(core), position);
        }
        const std::string text = read_input(path);
        try {
            TwistedComplex c = parse_complex(text);
            digest.add(serialize(c));
            return c;
        } catch (const DocumentError& e) {
            throw Failure{e.reason() == "validation" ? 1 : 2, e.reason(), path + ": " + e.what(), e.location()};
        }
    }
};

json ranks_json(const Ranks& ranks) {
    json out = json::array();
    for (const auto& [deg, r] : ranks) out.push_back({{"degree", deg}, {"rank", r}});
    return out;
}

json violation_json(const TwistedComplex& c, const Violation& v) {
    return {{"kind", to_string(v.kind)},
            {"from", v.from},
            {"to", v.to},
            {"slot", slot_name(c.summand(v.from)) + " -> " + slot_name(c.summand(v.to))},
            {"degree", v.degree},
            {"detail", v.detail}};
}

json certificate_json(const Certificate& cert) {
    json trace = json::array();
    for (const auto& t : cert.trace)
        trace.push_back({{"word", to_string(t.word)}, {"case", t.case_tag}, {"cx_before", t.cx_before},
                         {"cx_after", t.cx_after}});
    return {{"word", to_string(cert.word)},
            {"target_vertex", index(cert.target_vertex)},
            {"shift", cert.shift},
            {"multiplicity", cert.multiplicity},
            {"fallbacks", cert.fallbacks},
            {"trace", trace}};
}

void same_category(const TwistedComplex& a, const TwistedComplex& b) {
    if (!(a.category() == b.category()))
        throw Failure{2, "category_mismatch", "the two complexes live over different categories", ""};
}

void write_document(const std::string& path, const TwistedComplex& c) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Failure{2, "io", "cannot write " + path, path};
    out << serialize(c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with twisted complexes over the two-core plumbing category"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--n", g.n, "dimension of the cores (>= 3)");
    app.add_option("--char", g.characteristic, "field characteristic: 0 for Q, or a prime");
    app.add_option("--betti0", g.betti0, "comma-separated Betti numbers of Q0 (omit for a sphere)");
    app.add_option("--seed", g.seed, "seed for randomized searches");
    app.add_flag("--timing", g.timing, "include wall time in the report");

    json result;
    int status = 0;
    std::string csv;
    Digest digest;
    std::function<void()> action;

    auto* validate_cmd = app.add_subcommand("validate", "check a complex document");
    std::string in_path;
    validate_cmd->add_option("--in", in_path, "complex document")->required();
    validate_cmd->callback([&] {
        action = [&] {
            const std::string text = read_input(in_path);
            auto c = [&] {
                try {
                    return parse_complex(text, false);
                } catch (const DocumentError& e) {
                    throw Failure{2, e.reason(), in_path + ": " + e.what(), e.location()};
                }
            }();
            digest.add(serialize(c));
            json list = json::array();
            for (const auto& v : validate(c)) list.push_back(violation_json(c, v));
            result = {{"valid", list.empty()}, {"violations", list}};
            if (!list.empty()) status = 1;
        };
    });

    ComplexSource src_a, src_b;
    auto* hf_cmd = app.add_subcommand("hf", "ranks of HF(a, b)");
    hf_cmd->add_option("--a", src_a.path, "source complex")->required();
    hf_cmd->add_option("--b", src_b.path, "target complex")->required();
    hf_cmd->callback([&] {
        action = [&] {
            auto a = src_a.load(g, digest), b = src_b.load(g, digest);
            same_category(a, b);
            auto ranks = hf_ranks(a, b);
            result = {{"ranks", ranks_json(ranks)}, {"total", total_rank(ranks)}};
        };
    });

    ComplexSource src;
    int vertex = 0, power = 1;
    std::string out_path;
    auto* twist_cmd = app.add_subcommand("twist", "apply T_v or its inverse");
    src.attach(twist_cmd);
    twist_cmd->add_option("--vertex", vertex, "core to twist in")->check(CLI::Range(0, 1))->required();
    twist_cmd->add_option("--power", power, "+1 or -1")->check(CLI::IsMember({1, -1}));
    twist_cmd->add_option("--out", out_path, "also write the resulting document here");
    twist_cmd->callback([&] {
        action = [&] {
            auto c = src.load(g, digest);
            digest.add("twist " + std::to_string(vertex) + " " + std::to_string(power));
            auto t = twist(c, vertex_from_int(vertex), power);
            write_document(out_path, t);
            result = {{"complex", to_json(t)}};
        };
    });

    std::string word_text;
    auto* braid_cmd = app.add_subcommand("braid", "apply a braid word, letters left to right");
    src.attach(braid_cmd);
    braid_cmd->add_option("--word", word_text, "letters s0 S0 s1 S1, space separated")->required();
    braid_cmd->add_option("--out", out_path, "also write the resulting document here");
    braid_cmd->callback([&] {
        action = [&] {
            BraidWord word;
            try {
                word = parse_braid_word(word_text);
            } catch (const BraidSyntaxError& e) {
                throw Failure{2, "braid_syntax", e.what(), "--word"};
            }
            auto c = src.load(g, digest);
            digest.add("braid " + to_string(word));
            auto t = apply_braid(word, c);
            write_document(out_path, t);
            result = {{"word", to_string(word)}, {"complex", to_json(t)}};
        };
    });

    auto* normalize_cmd = app.add_subcommand("normalize", "reduce to copies of one shifted core");
    src.attach(normalize_cmd);
    normalize_cmd->callback([&] {
        action = [&] {
            auto c = src.load(g, digest);
            result = {{"certificate", certificate_json(normalize(c, g.seed))}};
        };
    });

    auto* equiv_cmd = app.add_subcommand("equiv", "decide whether two complexes are equivalent");
    equiv_cmd->add_option("--a", src_a.path, "first complex")->required();
    equiv_cmd->add_option("--b", src_b.path, "second complex")->required();
    equiv_cmd->callback([&] {
        action = [&] {
            auto a = src_a.load(g, digest), b = src_b.load(g, digest);
            same_category(a, b);
            auto e = equivalent(a, b, g.seed);
            result = {{"verdict", to_string(e.verdict)}, {"reason", e.reason}};
        };
    });

    std::string cover_index = "inf";
    int cover_vertex = 1;
    auto* specialize_cmd = app.add_subcommand("specialize", "kill the covered core's fundamental class");
    src.attach(specialize_cmd);
    specialize_cmd->add_option("--vertex", cover_vertex, "covered core")->check(CLI::Range(0, 1));
    specialize_cmd->add_option("--index", cover_index, "number of sheets, or inf");
    specialize_cmd->add_option("--out", out_path, "also write the resulting document here");
    specialize_cmd->callback([&] {
        action = [&] {
            CoverSpec cover{vertex_from_int(cover_vertex), std::nullopt};
            if (cover_index != "inf") {
                try {
                    std::size_t used = 0;
                    cover.index = std::stoull(cover_index, &used);
                    if (used != cover_index.size()) throw std::invalid_argument("trailing characters");
                } catch (const std::exception&) {
                    throw Failure{2, "usage", "--index must be a positive integer or inf", "--index"};
                }
            }
            auto c = src.load(g, digest);
            digest.add("cover " + std::to_string(cover_vertex) + " " + cover_index);
            try {
                auto s = specialize(c, cover);
                write_document(out_path, s);
                result = {{"complex", to_json(s)}};
            } catch (const CoverError& e) {
                throw Failure{2, "cover", e.what(), "--index"};
            }
        };
    });

    auto* decompose_cmd = app.add_subcommand("decompose", "split the minimal model into connected pieces");
    src.attach(decompose_cmd);
    decompose_cmd->callback([&] {
        action = [&] {
            json pieces = json::array();
            for (const auto& p : decompose(src.load(g, digest))) pieces.push_back(to_json(p));
            result = {{"pieces", pieces}};
        };
    });

    auto* fibre_cmd = app.add_subcommand("fibre-rank", "pair with a cotangent fibre of a core");
    src.attach(fibre_cmd);
    fibre_cmd->add_option("--vertex", vertex, "core whose fibre is used")->check(CLI::Range(0, 1))->required();
    fibre_cmd->callback([&] {
        action = [&] {
            auto c = src.load(g, digest);
            digest.add("fibre " + std::to_string(vertex));
            auto ranks = fibre_rank(c, vertex_from_int(vertex));
            result = {{"ranks", ranks_json(ranks)}, {"total", total_rank(ranks)}};
        };
    });

    std::string betti_text;
    auto* feas_cmd = app.add_subcommand("feasibility", "Betti-number test for a twist on a non-sphere core");
    feas_cmd->add_option("--betti", betti_text, "b0,...,bn")->required();
    feas_cmd->callback([&] {
        action = [&] {
            BettiVector betti;
            try {
                betti = parse_betti(betti_text);
            } catch (const std::exception& e) {
                throw Failure{2, "usage", e.what(), "--betti"};
            }
            if (app.count("--n") && betti.n() != g.n)
                throw Failure{2, "usage", "--betti has " + std::to_string(betti.b.size()) + " entries, --n " +
                                              std::to_string(g.n) + " needs " + std::to_string(g.n + 1),
                              "--betti"};
            if (auto problems = validate_betti(betti); !problems.empty())
                throw Failure{2, "usage", problems.front(), "--betti"};
            digest.add("betti " + betti_text);
            auto r = truncation_feasibility(betti);
            result = {{"beta", r.beta},
                      {"feasible", r.feasible},
                      {"min_dimV", r.min_dimV ? json(*r.min_dimV) : json(nullptr)},
                      {"boundary_ranks", r.boundary_ranks ? json(*r.boundary_ranks) : json(nullptr)},
                      {"note", r.note}};
        };
    });

    int k_max = 8;
    auto* table_cmd = app.add_subcommand("rank-table", "CSV of HF(Q0, (T1 T0)^k Q0) for k = 1..K");
    table_cmd->add_option("--k", k_max, "largest k")->check(CLI::Range(1, 1000));
    table_cmd->callback([&] {
        action = [&] {
            auto cat = category_from(g);
            const auto q0 = TwistedComplex::core(cat, Vertex::zero);
            std::ostringstream out;
            out << "k,total_rank,ranks\n";
            TwistedComplex c = q0;
            for (int k = 1; k <= k_max; ++k) {
                c = apply_braid(power_word(1), c);
                auto ranks = hf_ranks(q0, c);
                out << k << "," << total_rank(ranks) << ",";
                bool first = true;
                for (const auto& [deg, r] : ranks) {
                    out << (first ? "" : ";") << deg << ":" << r;
                    first = false;
                }
                out << "\n";
            }
            csv = out.str();
        };
    });

    std::size_t max_length = 4;
    auto* witness_cmd = app.add_subcommand("orbit-witness", "braid word carrying Q0 to a shift of Q1");
    witness_cmd->add_option("--max-length", max_length, "longest word searched")->check(CLI::Range(1, 8));
    witness_cmd->callback([&] {
        action = [&] {
            auto cat = category_from(g);
            auto w = core_orbit_witness(g.n, cat->field(), max_length);
            result = {{"word", to_string(w.word)}, {"shift", w.shift}};
        };
    });

    std::string command;
    auto report_failure = [&](const Failure& f) {
        json err = {{"command", command}, {"error", {{"reason", f.reason}, {"message", f.message}}}};
        if (!f.location.empty()) err["error"]["location"] = f.location;
        std::cout << err.dump(2) << "\n";
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_failure({2, "usage", e.what(), ""});
    }
    command = app.get_subcommands().front()->get_name();

    digest.add(command + " n=" + std::to_string(g.n) + " char=" + std::to_string(g.characteristic) +
               " betti0=" + g.betti0 + " seed=" + std::to_string(g.seed));
    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const Failure& f) {
        return report_failure(f);
    } catch (const PreconditionViolated& e) {
        return report_failure({1, "inadmissible", e.what(), ""});
    } catch (const ComplexityNotReduced& e) {
        return report_failure({1, "not_reduced", e.what(), ""});
    } catch (const IterationLimit& e) {
        return report_failure({1, "iteration_limit", e.what(), ""});
    } catch (const CertificateRejected& e) {
        return report_failure({1, "unverified", e.what(), ""});
    } catch (const SearchExhausted& e) {
        return report_failure({1, "search_exhausted", e.what(), ""});
    } catch (const ParameterError& e) {
        return report_failure({2, "parameters", e.what(), ""});
    } catch (const FieldError& e) {
        return report_failure({2, "parameters", e.what(), ""});
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!csv.empty()) {
        std::cout << csv;
        return status;
    }
    json report = {{"command", command}, {"inputs_digest", digest.hex()}, {"seed", g.seed}, {"result", result}};
    if (g.timing) report["wall_time_s"] = seconds;
    std::cout << report.dump(2) << "\n";
    return status;
}
