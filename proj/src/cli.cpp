#include <borders/cli.hpp>

#include <borders/border_core.hpp>
#include <borders/generators.hpp>
#include <borders/online_validator.hpp>
#include <borders/realtime_validator.hpp>
#include <borders/strict_validator.hpp>
#include <borders/succinct_validator.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace borders::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw BorderError(ErrorCode::Io, "cannot open " + path);
    buf << file.rdbuf();
    return buf.str();
}

// Calls f(line number, line) with '#' comments stripped.
template <class F>
void for_each_line(const std::string& text, F&& f) {
    std::istringstream lines(text);
    std::string line;
    for (std::size_t no = 1; std::getline(lines, line); ++no) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        f(no, line);
    }
}

std::vector<Value> parse_integers(const std::string& text) {
    std::vector<Value> out;
    for_each_line(text, [&](std::size_t no, const std::string& line) {
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            Value v = 0;
            const char* end = tok.data() + tok.size();
            const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
            if (ec != std::errc{} || ptr != end) {
                throw BorderError(ErrorCode::Parse,
                                  "line " + std::to_string(no) + ": not an integer: '" + tok + "'");
            }
            out.push_back(v);
        }
    });
    return out;
}

Word parse_word(const std::string& text, bool symbols) {
    Word w;
    if (symbols) {
        for_each_line(text, [&](std::size_t no, const std::string& line) {
            std::istringstream tokens(line);
            std::string tok;
            while (tokens >> tok) {
                Symbol s = 0;
                const char* end = tok.data() + tok.size();
                const auto [ptr, ec] = std::from_chars(tok.data(), end, s);
                if (ec != std::errc{} || ptr != end || s == 0) {
                    throw BorderError(ErrorCode::Parse, "line " + std::to_string(no) +
                                                            ": not a positive symbol: '" + tok + "'");
                }
                w.push_back(s);
            }
        });
        return w;
    }
    for_each_line(text, [&](std::size_t no, const std::string& line) {
        std::string letters;
        for (const char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) letters.push_back(c);
        }
        try {
            const Word part = encode_text(letters);
            w.insert(w.end(), part.begin(), part.end());
        } catch (const BorderError& e) {
            throw BorderError(ErrorCode::Parse, "line " + std::to_string(no) + ": " + e.what());
        }
    });
    return w;
}

std::string join(std::span<const Value> v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s.push_back(' ');
        s += std::to_string(v[k]);
    }
    return s;
}

std::string join(const Word& w) {
    std::vector<Value> v(w.begin(), w.end());
    return join(v);
}

struct Report {
    std::string kind;
    std::string engine;
    Verdict verdict;
    std::size_t n = 0;
    std::size_t alphabet = 0;
    std::optional<Word> witness;
    std::optional<std::vector<Value>> pi;
    std::uint64_t max_delay_ops = 0;
    std::uint64_t total_ops = 0;
    std::optional<std::uint64_t> memory_bits;
    double wall_time_us = 0;
};

std::string verdict_text(const Verdict& v) {
    return v.valid ? "valid" : "invalid@" + std::to_string(v.position);
}

void print_report(const Report& r, bool json, bool instrument, std::ostream& out) {
    if (json) {
        Json j;
        j["format"] = 1;
        j["kind"] = r.kind;
        j["engine"] = r.engine;
        j["verdict"] = verdict_text(r.verdict);
        j["n"] = r.n;
        if (r.verdict.valid) j["min_alphabet"] = r.alphabet;
        if (r.witness) j["witness"] = *r.witness;
        if (r.pi) j["pi"] = *r.pi;
        if (instrument) {
            j["max_delay_ops"] = r.max_delay_ops;
            j["total_ops"] = r.total_ops;
            if (r.memory_bits) j["memory_bits"] = *r.memory_bits;
            j["wall_time_us"] = r.wall_time_us;
        }
        out << j.dump() << '\n';
        return;
    }
    out << "format=1\n";
    out << "kind=" << r.kind << '\n';
    out << "engine=" << r.engine << '\n';
    out << "verdict=" << verdict_text(r.verdict) << '\n';
    out << "n=" << r.n << '\n';
    if (r.verdict.valid) out << "min_alphabet=" << r.alphabet << '\n';
    if (r.witness) out << "witness=" << join(*r.witness) << '\n';
    if (r.pi) out << "pi=" << join(*r.pi) << '\n';
    if (instrument) {
        out << "max_delay_ops=" << r.max_delay_ops << '\n';
        out << "total_ops=" << r.total_ops << '\n';
        if (r.memory_bits) out << "memory_bits=" << *r.memory_bits << '\n';
        out << "wall_time_us=" << r.wall_time_us << '\n';
    }
}

struct EngineOptions {
    std::string kind = "pi";
    std::string engine;
    std::uint64_t n_max = std::uint64_t{1} << 32;
    bool lazy_copy = false;
};

// Streams `values` through the chosen engine. `ops_of` reads the cost of the
// last push; `finish` fills engine-specific fields.
template <class Engine, class Ops, class Finish>
Report stream(Engine& engine, const std::vector<Value>& values, Ops&& ops_of, Finish&& finish) {
    Report r;
    r.n = values.size();
    r.verdict = Verdict::accept(0, 0, 0);
    const auto start = std::chrono::steady_clock::now();
    for (const Value a : values) {
        r.verdict = engine.push(a);
        const std::uint64_t ops = ops_of(engine);
        r.max_delay_ops = std::max(r.max_delay_ops, ops);
        r.total_ops += ops;
        if (!r.verdict.valid) break;
    }
    r.wall_time_us =
        std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
    finish(engine, r);
    return r;
}

Report run_engine(const EngineOptions& o, const std::vector<Value>& values, bool want_witness, bool want_pi) {
    if (o.engine == "basic") {
        OnlineValidator v;
        return stream(
            v, values, [](const auto& e) { return e.last_push_ops(); },
            [&](const auto& e, Report& r) {
                r.alphabet = e.max_alphabet();
                r.memory_bits = e.memory_bits(32);
                if (want_witness && r.verdict.valid) r.witness = e.witness();
            });
    }
    if (o.engine == "realtime") {
        RealtimeOptions ro;
        ro.n_max = o.n_max;
        RealtimeValidator v(ro);
        return stream(
            v, values, [](const auto& e) { return e.last_push_ops(); },
            [&](const auto& e, Report& r) {
                r.alphabet = e.max_alphabet();
                if (want_witness && r.verdict.valid) r.witness = e.witness();
            });
    }
    if (o.engine == "succinct") {
        SuccinctOptions so;
        so.n_max = o.n_max;
        so.lazy_copy = o.lazy_copy;
        SuccinctValidator v(so);
        return stream(
            v, values, [](const auto& e) { return e.stats().last_push_ops; },
            [&](const auto& e, Report& r) {
                if (r.verdict.valid) e.finish();
                r.alphabet = e.max_alphabet();
                r.memory_bits = e.memory_bits();
                if (want_witness && r.verdict.valid) r.witness = e.witness();
            });
    }
    // slope engine: pi_prime or g streams
    auto slope_finish = [&](const StrictValidator& e, Report& r) {
        r.alphabet = e.alphabet();
        if (want_pi && r.verdict.valid) r.pi = e.recovered_pi();
    };
    auto slope_ops = [](const StrictValidator& e, std::uint64_t& last) {
        const std::uint64_t now = e.stats().total_ops;
        const std::uint64_t d = now - last;
        last = now;
        return d;
    };
    std::uint64_t last = 0;
    if (o.kind == "g") {
        GValidator v;
        return stream(
            v, values, [&](const GValidator& e) { return slope_ops(e.inner(), last); },
            [&](const GValidator& e, Report& r) { slope_finish(e.inner(), r); });
    }
    StrictValidator v;
    return stream(
        v, values, [&](const StrictValidator& e) { return slope_ops(e, last); },
        [&](const StrictValidator& e, Report& r) { slope_finish(e, r); });
}

void check_engine(EngineOptions& o) {
    const bool strict_kind = o.kind == "pi_prime" || o.kind == "g";
    if (o.engine.empty()) o.engine = strict_kind ? "slope" : "basic";
    if (strict_kind != (o.engine == "slope")) {
        throw BorderError(ErrorCode::Usage, "engine " + o.engine + " does not accept kind " + o.kind);
    }
}

std::vector<Value> generate(gen::Family fam, std::size_t n, std::uint64_t seed, double unary_bias) {
    if (fam == gen::Family::RandomValidPi) return gen::random_valid_pi(n, seed, unary_bias);
    return gen::family_pi(fam, n, seed);
}

std::vector<Value> to_kind(const std::vector<Value>& pi, const std::string& kind) {
    if (kind == "pi") return pi;
    const auto pp = pi_to_pi_prime(BorderArray(pi));
    return {pp.values().begin(), pp.values().end()};
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Border array and strict border array validation"};
    app.require_subcommand(1);

    const std::vector<std::string> kinds{"pi", "pi_prime", "g"};
    const std::vector<std::string> engines{"basic", "realtime", "succinct", "slope"};
    const std::vector<std::string> families{"unary",       "fibonacci",       "thue_morse",
                                            "random_word", "random_valid_pi", "lowerbound_pair"};

    std::string input = "-";
    std::string format = "kv";
    EngineOptions eo;
    bool symbols = false;
    bool emit_pi = false;
    bool emit_witness = false;
    bool instrument = false;
    std::string family;
    std::size_t n = 0;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
    double unary_bias = 0;
    std::string member = "both";

    auto* compute = app.add_subcommand("compute", "print pi or pi' of a word, one value per line");
    compute->add_option("--kind", eo.kind, "pi or pi_prime")
        ->check(CLI::IsMember({"pi", "pi_prime"}));
    compute->add_flag("--symbols", symbols, "word is given as positive integers");
    compute->add_option("input", input, "word file, - for stdin");

    auto* validate = app.add_subcommand("validate", "stream an array through a validator");
    validate->add_option("--kind", eo.kind, "pi, pi_prime or g")->check(CLI::IsMember(kinds));
    validate->add_option("--engine", eo.engine, "basic, realtime, succinct or slope")
        ->check(CLI::IsMember(engines));
    validate->add_flag("--emit-pi", emit_pi, "print the recovered pi (slope engine)");
    validate->add_flag("--emit-witness", emit_witness, "print a minimal-alphabet witness (pi engines)");
    validate->add_option("--format", format, "kv or json")->check(CLI::IsMember({"kv", "json"}));
    validate->add_flag("--instrument", instrument, "add operation counts, memory and time");
    validate->add_flag("--lazy-copy", eo.lazy_copy, "succinct engine copies blocks lazily");
    validate->add_option("--n-max", eo.n_max, "largest supported length");
    validate->add_option("input", input, "array file, - for stdin");

    auto* gen_cmd = app.add_subcommand("gen", "generate an array from a test family");
    gen_cmd->add_option("--family", family)->required()->check(CLI::IsMember(families));
    gen_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--kind", eo.kind, "pi or pi_prime")->check(CLI::IsMember({"pi", "pi_prime"}));
    gen_cmd->add_option("--unary-bias", unary_bias, "random_valid_pi: chance of extending")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--member", member, "lowerbound_pair: first, second or both")
        ->check(CLI::IsMember({"first", "second", "both"}));

    auto* bench = app.add_subcommand("bench", "instrumentation table over several lengths");
    bench->add_option("--engine", eo.engine)->required()->check(CLI::IsMember(engines));
    bench->add_option("--family", family)->required()->check(CLI::IsMember(families));
    bench->add_option("--n", sizes, "lengths, comma separated")->required()->delimiter(',');
    bench->add_option("--seed", seed);
    bench->add_flag("--lazy-copy", eo.lazy_copy);
    bench->add_option("--format", format, "kv or json")->check(CLI::IsMember({"kv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*compute) {
            const Word w = parse_word(slurp(input, in), symbols);
            const auto pi = compute_pi(w);
            if (eo.kind == "pi") {
                for (const Value v : pi.values()) out << v << '\n';
            } else {
                const auto strict = pi_to_pi_prime(pi);
                for (const Value v : strict.values()) out << v << '\n';
            }
            return kExitValid;
        }
        if (*validate) {
            check_engine(eo);
            const auto values = parse_integers(slurp(input, in));
            Report r = run_engine(eo, values, emit_witness, emit_pi);
            r.kind = eo.kind;
            r.engine = eo.engine;
            print_report(r, format == "json", instrument, out);
            return r.verdict.valid ? kExitValid : kExitInvalid;
        }
        if (*gen_cmd) {
            const gen::Family fam = *gen::parse_family(family);
            if (fam == gen::Family::LowerBoundPair) {
                const auto pair = gen::lowerbound_pair(n, seed);
                out << "# lowerbound_pair n=" << n << " seed=" << seed
                    << " valid=" << (pair.valid_index == 0 ? "first" : "second") << " split=" << pair.split
                    << '\n';
                if (member != "second") out << join(to_kind(pair.first, eo.kind)) << '\n';
                if (member != "first") out << join(to_kind(pair.second, eo.kind)) << '\n';
                return kExitValid;
            }
            out << join(to_kind(generate(fam, n, seed, unary_bias), eo.kind)) << '\n';
            return kExitValid;
        }
        if (*bench) {
            const gen::Family fam = *gen::parse_family(family);
            if (fam == gen::Family::LowerBoundPair) {
                throw BorderError(ErrorCode::Usage, "bench needs a single-array family");
            }
            eo.kind = eo.engine == "slope" ? "pi_prime" : "pi";
            Json rows = Json::array();
            if (format == "kv") out << "engine family n max_delay_ops total_ops memory_bits wall_time_us\n";
            for (const std::size_t size : sizes) {
                eo.n_max = std::max<std::size_t>(size, 2);
                const Report r = run_engine(eo, to_kind(generate(fam, size, seed, 0), eo.kind), false, false);
                if (!r.verdict.valid) {
                    throw BorderError(ErrorCode::StateInvalid, "generated input rejected at " +
                                                                   std::to_string(r.verdict.position));
                }
                const std::string mem = r.memory_bits ? std::to_string(*r.memory_bits) : "-";
                if (format == "kv") {
                    out << eo.engine << ' ' << family << ' ' << size << ' ' << r.max_delay_ops << ' '
                        << r.total_ops << ' ' << mem << ' ' << static_cast<std::uint64_t>(r.wall_time_us)
                        << '\n';
                } else {
                    Json row{{"engine", eo.engine}, {"family", family}, {"n", size},
                             {"max_delay_ops", r.max_delay_ops}, {"total_ops", r.total_ops}};
                    if (r.memory_bits) row["memory_bits"] = *r.memory_bits;
                    row["wall_time_us"] = r.wall_time_us;
                    rows.push_back(row);
                }
            }
            if (format == "json") out << Json{{"format", 1}, {"rows", rows}}.dump() << '\n';
            return kExitValid;
        }
    } catch (const BorderError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace borders::cli
