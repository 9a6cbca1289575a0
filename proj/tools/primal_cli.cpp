// Command-line surface for the signed digital-root toolkit.
//
// Exit codes: 0 success, 1 domain refusal (malformed query, resource
// guard), 2 strict-audit mismatch, 3 internal soundness violation,
// 64 usage error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "primal/serialize.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitRefusal = 1;
constexpr int kExitStrictMismatch = 2;
constexpr int kExitSoundness = 3;

const char* kPhi = "\xCF\x86";
const char* kEmptySet = "\xE2\x88\x85";

primal::SignedResidue parse_label(const std::string& s) {
    if (s == "null") return primal::SignedResidue::null();
    return primal::SignedResidue::from_label(std::stoi(s));
}

primal::OpKind parse_op(const std::string& s) {
    if (s == "add") return primal::OpKind::Add;
    if (s == "sub") return primal::OpKind::Sub;
    if (s == "mul") return primal::OpKind::Mul;
    if (s == "div") return primal::OpKind::Div;
    throw std::invalid_argument("unknown operation: " + s);
}

primal::TableFormat parse_format(const std::string& s) {
    if (s == "text") return primal::TableFormat::Text;
    if (s == "csv") return primal::TableFormat::Csv;
    if (s == "records") return primal::TableFormat::Records;
    throw std::invalid_argument("unknown format: " + s);
}

std::string label_str(primal::SignedResidue r) {
    return std::to_string(r.label()) + "_" + kPhi;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed digital-root arithmetic and conjecture toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit one JSON document on stdout");

    // reduce
    std::string reduce_arg;
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce an integer to its class");
    reduce_cmd->add_option("value", reduce_arg)->required();

    // encode
    std::string encode_arg;
    auto* encode_cmd = app.add_subcommand("encode", "compress a nonzero integer to label_row");
    encode_cmd->add_option("value", encode_arg)->required();

    // decode
    std::string decode_label, decode_row;
    auto* decode_cmd = app.add_subcommand("decode", "decompress label and row to the integer");
    decode_cmd->add_option("label", decode_label)->required();
    decode_cmd->add_option("row", decode_row)->required();

    // table
    int table_id = 0;
    std::string table_format = "text";
    auto* table_cmd = app.add_subcommand("table", "emit a regenerated operation table");
    table_cmd->add_option("id", table_id)->required();
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"text", "csv", "records"}));

    // audit
    int audit_id = 0;
    bool strict = false;
    auto* audit_cmd = app.add_subcommand("audit", "diff a table against its transcription");
    audit_cmd->add_option("id", audit_id)->required();
    audit_cmd->add_flag("--strict", strict, "exit 2 when any cell mismatches");

    // axioms
    std::string axioms_op;
    auto* axioms_cmd = app.add_subcommand("axioms", "exhaustive group-axiom check");
    axioms_cmd->add_option("op", axioms_op)->required()->check(CLI::IsMember({"add", "mul"}));

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "conjecture checks");
    conj_cmd->require_subcommand(1);

    std::string w_op, w_a, w_b;
    std::int64_t w_target = 0, w_bound = 100;
    auto* witness_cmd = conj_cmd->add_subcommand("witness", "exact-witness search");
    witness_cmd->add_option("op", w_op)->required()->check(CLI::IsMember({"add", "sub", "mul", "div"}));
    witness_cmd->add_option("class_a", w_a)->required();
    witness_cmd->add_option("class_b", w_b)->required();
    witness_cmd->add_option("target", w_target)->required();
    witness_cmd->add_option("--bound", w_bound);

    std::int64_t max_n = 200;
    auto* cycle_cmd = conj_cmd->add_subcommand("power-cycle", "period-6 power cycle check");
    cycle_cmd->add_option("--max-n", max_n);

    auto* cubes_cmd = conj_cmd->add_subcommand("cubes-profile", "three-cube residues mod 9");

    std::int64_t ninth_bound = 10000;
    auto* ninth_cmd = conj_cmd->add_subcommand("ninth-equiv", "x^9 vs x^3 congruence mod 9");
    ninth_cmd->add_option("--bound", ninth_bound);

    std::int64_t fermat_n = 3;
    auto* fermat_cmd = conj_cmd->add_subcommand("fermat-profile", "two-term power-sum residues");
    fermat_cmd->add_option("--exponent", fermat_n);

    // search / bench
    primal::SearchConfig cfg;
    std::int64_t k_single = 0;
    bool no_filter = false;
    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--k", k_single);
        cmd->add_option("--k-min", cfg.k_min);
        cmd->add_option("--k-max", cfg.k_max);
        cmd->add_option("--bound", cfg.bound);
        cmd->add_option("--exponent", cfg.exponent);
        cmd->add_option("--workers", cfg.worker_count);
        cmd->add_flag("--no-filter", no_filter);
        cmd->add_option("--ceiling", cfg.candidate_ceiling);
    };
    auto* search_cmd = app.add_subcommand("search", "bounded power-sum search");
    add_search_flags(search_cmd);
    auto* bench_cmd = app.add_subcommand("bench", "filtered vs unfiltered comparison");
    add_search_flags(bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    using namespace primal;
    try {
        if (*reduce_cmd) {
            std::int64_t v = std::stoll(reduce_arg);
            auto trace = iterated_digital_root(v);
            if (json_out) {
                json j{{"value", v},
                       {"label", trace.fixed_point.label()},
                       {"k", trace.k},
                       {"steps", trace.steps}};
                if (v != 0) {
                    auto c = encode(v);
                    j["coord"] = {{"label", c.label.label()}, {"row", c.row}};
                }
                std::cout << j.dump() << "\n";
            } else if (v == 0) {
                std::cout << kEmptySet << " (null class)\n";
            } else {
                auto c = encode(v);
                std::cout << label_str(trace.fixed_point) << ", k=" << trace.k << ", coord "
                          << c.label.label() << "_" << c.row << "\n";
            }
            return 0;
        }
        if (*encode_cmd) {
            auto c = encode(std::stoll(encode_arg));
            if (json_out)
                std::cout << json{{"label", c.label.label()}, {"row", c.row}}.dump() << "\n";
            else
                std::cout << c.label.label() << "_" << c.row << "\n";
            return 0;
        }
        if (*decode_cmd) {
            MatrixCoord c{SignedResidue::from_label(std::stoi(decode_label)),
                          std::stoll(decode_row)};
            std::int64_t v = decode(c);
            if (json_out)
                std::cout << json{{"value", v}}.dump() << "\n";
            else
                std::cout << v << "\n";
            return 0;
        }
        if (*table_cmd) {
            OpTable t;
            switch (table_id) {
            case 4: t = generate_table(OpKind::Add); break;
            case 5: t = generate_table(OpKind::Sub, TableOrientation::PositiveResult); break;
            case 6: t = generate_table(OpKind::Sub, TableOrientation::NegativeResult); break;
            case 7: t = generate_table(OpKind::Div); break;
            case 8: t = generate_table(OpKind::Mul); break;
            case 9: t = generate_table(OpKind::Pow); break;
            default: std::cerr << "unknown table id: " << table_id << "\n"; return kExitUsage;
            }
            std::cout << render_table(t, parse_format(table_format));
            return 0;
        }
        if (*audit_cmd) {
            if (audit_id < 4 || audit_id > 9) {
                std::cerr << "unknown table id: " << audit_id << "\n";
                return kExitUsage;
            }
            auto a = audit_table(audit_id);
            if (json_out) {
                std::cout << to_json(a).dump() << "\n";
            } else {
                std::cout << a.match_count << "/" << a.match_count + a.mismatch_count
                          << " match\n";
                for (const auto& m : a.mismatches) {
                    std::cout << "  row " << kPhi << "^" << m.row_label.label() << ", col "
                              << m.col << ": paper ";
                    for (std::size_t i = 0; i < m.paper_cell.size(); ++i)
                        std::cout << (i ? ";" : "") << m.paper_cell[i];
                    if (m.paper_cell.empty()) std::cout << kEmptySet;
                    std::cout << " vs computed ";
                    for (std::size_t i = 0; i < m.computed_cell.size(); ++i)
                        std::cout << (i ? ";" : "") << m.computed_cell[i];
                    if (m.computed_cell.empty()) std::cout << kEmptySet;
                    std::cout << "\n";
                }
            }
            return strict && a.mismatch_count > 0 ? kExitStrictMismatch : 0;
        }
        if (*axioms_cmd) {
            auto rep = verify_group_axioms(axioms_op == "add" ? OpKind::Add : OpKind::Mul);
            if (json_out) {
                std::cout << to_json(rep).dump() << "\n";
            } else {
                std::cout << "closure: " << (rep.closure_ok ? "ok" : "FAIL") << "\n"
                          << "associativity: " << (rep.associativity_ok ? "ok" : "FAIL") << "\n"
                          << "neutral: " << label_str(rep.neutral_label) << "\n"
                          << "opposite pairs: " << rep.opposite_pairs.size() << "\n";
                if (!rep.labels_without_opposite.empty()) {
                    std::cout << "no opposite for:";
                    for (auto l : rep.labels_without_opposite) std::cout << " " << l.label();
                    std::cout << "\n";
                }
                if (rep.cancellation_ok)
                    std::cout << "cancellation: " << (*rep.cancellation_ok ? "ok" : "FAIL")
                              << "\n";
                for (const auto& c : rep.counterexamples)
                    std::cout << "counterexample: " << c << "\n";
            }
            return 0;
        }
        if (*witness_cmd) {
            WitnessQuery q{parse_op(w_op), parse_label(w_a), parse_label(w_b), w_target,
                           w_bound};
            WitnessReport rep;
            try {
                rep = witness_search(q);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return kExitRefusal;
            }
            if (json_out) {
                std::cout << to_json(rep).dump() << "\n";
            } else if (rep.witnesses.empty()) {
                std::cout << "no witnesses, exhausted (scanned " << rep.scanned << ")\n";
            } else {
                std::cout << rep.witnesses.size() << " witnesses, first (";
                std::cout << rep.witnesses.front().first << ", "
                          << rep.witnesses.front().second << ")";
                std::cout << ", universal=" << (rep.universal ? "true" : "false") << "\n";
            }
            return 0;
        }
        if (*cycle_cmd) {
            auto rep = power_cycle_check(max_n);
            if (json_out)
                std::cout << to_json(rep).dump() << "\n";
            else {
                std::cout << rep.violations.size() << " violations in n=[2," << max_n << "]\n";
                for (const auto& b : rep.boundary)
                    std::cout << "  n=1 boundary, label " << b.label.label() << ": " << b.at_n1
                              << " vs n=7: " << b.at_n7
                              << (b.cycle_holds_at_n1 ? " (holds)" : " (breaks)") << "\n";
            }
            return 0;
        }
        if (*cubes_cmd) {
            auto p = cube_residue_profile();
            if (json_out)
                std::cout << to_json(p).dump() << "\n";
            else {
                std::cout << "attainable residues mod 9:";
                for (int r : p.attainable) std::cout << " " << r;
                std::cout << "\n";
            }
            return 0;
        }
        if (*ninth_cmd) {
            auto rep = ninth_power_equiv_check(ninth_bound);
            if (json_out)
                std::cout << to_json(rep).dump() << "\n";
            else
                std::cout << rep.violations.size() << " violations over |x| <= " << rep.bound
                          << "\n";
            return 0;
        }
        if (*fermat_cmd) {
            auto p = fermat_cycle_profile(fermat_n);
            if (json_out)
                std::cout << to_json(p).dump() << "\n";
            else {
                std::cout << "n=" << p.n << " lhs:";
                for (int r : p.lhs_attainable) std::cout << " " << r;
                std::cout << " rhs:";
                for (int r : p.rhs_attainable) std::cout << " " << r;
                std::cout << " cycle_stable=" << (p.cycle_stable ? "true" : "false") << "\n";
            }
            return 0;
        }
        if (*search_cmd || *bench_cmd) {
            if (search_cmd->count("--k") || bench_cmd->count("--k")) {
                cfg.k_min = k_single;
                cfg.k_max = k_single;
            }
            cfg.filter_enabled = !no_filter;
            if (*search_cmd) {
                SearchReport rep;
                try {
                    rep = search(cfg);
                } catch (const ResourceLimitError& e) {
                    std::cerr << e.what() << "\n";
                    return kExitRefusal;
                }
                if (json_out) {
                    std::cout << to_json(rep).dump() << "\n";
                } else {
                    for (const auto& kr : rep.per_k) {
                        std::cout << "k=" << kr.k << " " << status_name(kr.status);
                        if (kr.status == KStatus::FilteredOut)
                            std::cout << " (" << kr.k << " \xE2\x89\xA1 " << ((kr.k % 9) + 9) % 9
                                      << " mod 9)";
                        for (const auto& s : kr.solutions)
                            std::cout << " (" << s[0] << "," << s[1] << "," << s[2] << ")";
                        std::cout << "\n";
                    }
                    std::cout << "examined " << rep.candidates_examined << ", skipped "
                              << rep.filter_skips << " k-values, " << rep.elapsed_ms << " ms\n";
                }
            } else {
                BenchResult bench;
                try {
                    bench = bench_compare(cfg);
                } catch (const ResourceLimitError& e) {
                    std::cerr << e.what() << "\n";
                    return kExitRefusal;
                }
                if (json_out)
                    std::cout << to_json(bench).dump() << "\n";
                else
                    std::cout << "solution sets "
                              << (bench.solution_sets_equal ? "equal" : "DIFFERENT")
                              << ", skipped " << bench.filtered.filter_skips << "/"
                              << bench.filtered.per_k.size() << " k-values, candidate ratio "
                              << bench.candidate_ratio << ", wall-clock ratio "
                              << bench.wallclock_ratio << "\n";
                if (!bench.solution_sets_equal) return kExitSoundness;
            }
            return 0;
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
