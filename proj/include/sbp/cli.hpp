#pragma once

/**
 * @file cli.hpp
 * @brief Command-line surface: verify, derive, convert, check, enumerate,
 *        census, props.
 *
 * Exit codes: 0 for valid/true results, 1 for a verification failure (a
 * report is still emitted), 2 for malformed input or usage errors. All
 * numeric output is 1-based and byte-deterministic for fixed inputs;
 * SBP_WORKERS overrides the worker count for the enumeration verbs.
 */

#include "action.hpp"
#include "enumeration.hpp"
#include "extension.hpp"
#include "json_io.hpp"
#include "magma.hpp"
#include "semibiproduct.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace sbp::cli {

namespace detail {

inline int default_workers() {
    if (const char* env = std::getenv("SBP_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open file", path);
    return json::parse(in);  // parse_error carries the byte position
}

inline std::string pos1(int v) { return std::to_string(v + 1); }

inline std::string sbp_failure_text(const SbpReport& rep) {
    switch (*rep.failed_equation) {
    case SbpFailure::kq_sp: return "kq+sp fails at a=" + pos1(rep.witness[0]);
    case SbpFailure::ps: return "ps fails at b=" + pos1(rep.witness[0]);
    case SbpFailure::qk: return "qk fails at x=" + pos1(rep.witness[0]);
    case SbpFailure::k_hom:
        return "k is not a homomorphism at (x,x')=(" + pos1(rep.witness[0]) + "," +
               pos1(rep.witness[1]) + ")";
    case SbpFailure::p_hom:
        return "p is not a homomorphism at (a,a')=(" + pos1(rep.witness[0]) + "," +
               pos1(rep.witness[1]) + ")";
    }
    return "";
}

inline const char* sbp_failure_tag(SbpFailure f) {
    switch (f) {
    case SbpFailure::kq_sp: return "kq+sp";
    case SbpFailure::ps: return "ps";
    case SbpFailure::qk: return "qk";
    case SbpFailure::k_hom: return "k-hom";
    case SbpFailure::p_hom: return "p-hom";
    }
    return "";
}

inline const char* action_failure_tag(ActionFailure f) {
    switch (f) {
    case ActionFailure::hom_compat: return "hom-compat";
    case ActionFailure::h_in_R: return "h-in-R";
    case ActionFailure::t_in_R: return "t-in-R";
    case ActionFailure::R_closure: return "R-closure";
    }
    return "";
}

inline std::string action_failure_text(const ActionReport& rep) {
    const auto& w = rep.witness;
    switch (*rep.failed_condition) {
    case ActionFailure::hom_compat:
        return "hom-compat fails at (x,x')=(" + pos1(w[0]) + "," + pos1(w[1]) + ")";
    case ActionFailure::h_in_R:
        return "(x,h(x)) not in R at x=" + pos1(w[0]);
    case ActionFailure::t_in_R:
        return "(t(b),b) not in R at b=" + pos1(w[0]);
    case ActionFailure::R_closure:
        return "R not closed at ((x,b),(x',b'))=((" + pos1(w[0]) + "," + pos1(w[1]) +
               "),(" + pos1(w[2]) + "," + pos1(w[3]) + "))";
    }
    return "";
}

inline json action_report_json(const ActionReport& rep) {
    json j{{"valid", rep.is_action}};
    if (!rep.is_action) {
        j["failed_condition"] = action_failure_tag(*rep.failed_condition);
        json w = json::array();
        for (int v : rep.witness)
            if (v >= 0) w.push_back(v + 1);
        j["witness"] = w;
    }
    return j;
}

inline json sbp_report_json(const SbpReport& rep) {
    json j{{"valid", rep.valid}};
    if (!rep.valid) {
        j["failed_equation"] = sbp_failure_tag(*rep.failed_equation);
        json w = json::array();
        for (int v : rep.witness)
            if (v >= 0) w.push_back(v + 1);
        j["witness"] = w;
    }
    return j;
}

enum class FileKind { magma, action, semibiproduct };

inline FileKind detect_kind(const json& j) {
    if (!j.is_object()) throw schema_error("expected an object", "$");
    if (j.contains("phi")) return FileKind::action;
    if (j.contains("k")) return FileKind::semibiproduct;
    if (j.contains("table")) return FileKind::magma;
    throw schema_error("cannot tell magma / action / semibiproduct file apart", "$");
}

struct CheckResult {
    bool value = false;
    json report;                      // json-mode payload
    std::vector<std::string> lines;   // text-mode payload (after true/false line)
};

inline CheckResult check_magma(const std::string& prop, const Magma& m) {
    CheckResult r;
    if (prop == "associative") {
        auto w = associativity_witness(m);
        r.value = !w;
        r.report["associative"] = r.value;
        if (w) {
            r.report["witness"] = {w->a + 1, w->b + 1, w->c + 1};
            r.lines.push_back("witness: (a,b,c)=(" + pos1(w->a) + "," + pos1(w->b) + "," +
                              pos1(w->c) + ")");
        }
    } else if (prop == "commutative") {
        r.value = is_commutative(m);
        r.report["commutative"] = r.value;
    } else if (prop == "unital") {
        auto e = identity_element(m);
        r.value = e.has_value();
        r.report["unital"] = r.value;
        if (e) {
            r.report["identity"] = *e + 1;
            r.lines.push_back("identity: " + pos1(*e));
        }
    } else if (prop == "group") {
        r.value = is_group(m);
        r.report["group"] = r.value;
    } else {
        throw schema_error("property '" + prop + "' does not apply to a magma file", "$");
    }
    return r;
}

inline CheckResult check_action(const std::string& prop, const MagmaAction& a) {
    CheckResult r;
    if (prop == "valid") {
        ActionReport rep = verify_action(a);
        r.value = rep.is_action;
        r.report = action_report_json(rep);
        if (!rep.is_action) r.lines.push_back(action_failure_text(rep));
        return r;
    }
    ActionReport rep = verify_action(a);
    if (!rep.is_action)
        throw schema_error("not a valid magma-action: " + action_failure_text(rep), "$");
    if (prop == "associative") {
        RMagma rm = compute_R(a);
        auto w = action_associativity_witness(a);
        r.value = !w;
        r.report["associative"] = r.value;
        if (w) {
            auto pj = [&](int i) {
                return json::array({rm.pairs[i].x + 1, rm.pairs[i].b + 1});
            };
            r.report["witness"] = {pj(w->a), pj(w->b), pj(w->c)};
            auto pt = [&](int i) {
                return "(" + pos1(rm.pairs[i].x) + "," + pos1(rm.pairs[i].b) + ")";
            };
            r.lines.push_back("witness: a=" + pt(w->a) + " b=" + pt(w->b) +
                              " c=" + pt(w->c));
        }
    } else if (prop == "representable") {
        auto w = representability_witness(a);
        r.value = !w;
        r.report["representable"] = r.value;
        if (w) {
            r.report["witness"] = {{w->first.x + 1, w->first.b + 1},
                                   {w->second.x + 1, w->second.b + 1}};
            r.lines.push_back("witness: ((x,b),(x',b'))=((" + pos1(w->first.x) + "," +
                              pos1(w->first.b) + "),(" + pos1(w->second.x) + "," +
                              pos1(w->second.b) + "))");
        }
    } else if (prop == "unitary-semidirect") {
        r.value = is_unitary_semidirect(a);
        r.report["unitary_semidirect"] = r.value;
    } else {
        throw schema_error("property '" + prop + "' does not apply to an action file", "$");
    }
    return r;
}

inline CheckResult check_sbp(const std::string& prop, const Semibiproduct& sb) {
    CheckResult r;
    if (prop == "valid") {
        SbpReport rep = verify_sbp(sb);
        r.value = rep.valid;
        r.report = sbp_report_json(rep);
        if (!rep.valid) r.lines.push_back(sbp_failure_text(rep));
        return r;
    }
    SbpReport rep = verify_sbp(sb);
    if (!rep.valid)
        throw schema_error("not a valid semibiproduct: " + sbp_failure_text(rep), "$");
    if (prop == "battery") {
        BatteryReport b = structure_battery(sb);
        r.value = b.all_pass();
        json items = json::array();
        for (int i = 0; i < 11; ++i) {
            items.push_back({{"item", i + 1}, {"pass", b.items[i].pass}});
            std::string line = "item (" + std::to_string(i + 1) + "): " +
                               (b.items[i].pass ? "pass" : "FAIL");
            if (!b.items[i].pass) line += " (" + b.items[i].note + ")";
            r.lines.push_back(line);
        }
        r.report["items"] = items;
        r.report["all_pass"] = r.value;
    } else if (prop == "monoid-formula") {
        MonoidFormulaReport m = monoid_formula_check(sb);
        r.value = m.monoid_formula_agrees;
        r.report["monoid_formula_agrees"] = m.monoid_formula_agrees;
        r.report["modified_matches_transport"] = m.modified_matches_transport;
        r.lines.push_back(std::string("modified formula matches R operation: ") +
                          (m.modified_matches_transport ? "yes" : "NO"));
    } else if (prop == "pointed") {
        r.value = is_pointed(sb);
        r.report["pointed"] = r.value;
    } else if (prop == "group-checks") {
        GroupChecksReport g = group_checks(sb);
        r.value = g.all_pass();
        r.report = {{"q_formula", g.q_formula},     {"q_unique", g.q_unique},
                    {"h_trivial", g.h_trivial},     {"rho_trivial", g.rho_trivial},
                    {"factor_system_iso", g.factor_system_iso}, {"all_pass", r.value}};
        auto line = [&](const char* name, bool v) {
            r.lines.push_back(std::string(name) + ": " + (v ? "pass" : "FAIL"));
        };
        line("q formula", g.q_formula);
        line("q unique", g.q_unique);
        line("h trivial", g.h_trivial);
        line("rho trivial", g.rho_trivial);
        line("factor-system product isomorphic to A", g.factor_system_iso);
    } else {
        throw schema_error("property '" + prop + "' does not apply to a semibiproduct file",
                           "$");
    }
    return r;
}

} // namespace detail

/// Runs the toolkit on the given arguments (program name excluded) and
/// streams; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite semibiproduct toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    std::string in_path, prop;
    std::vector<std::string> ends;
    int middle_order = 3, order = 2, z_bound = 3;
    bool list = false, want_kernel = false, want_cokernel = false;
    std::string structure = "semigroup", dedup = "middle-iso";

    CLI::App* c_va = app.add_subcommand("verify-action", "verify a magma-action file");
    c_va->add_option("file", in_path)->required();
    CLI::App* c_vs = app.add_subcommand("verify-sbp", "verify a semibiproduct file");
    c_vs->add_option("file", in_path)->required();
    CLI::App* c_dv = app.add_subcommand("derive", "derived tuple (h,rho,phi,gamma,t) and R");
    c_dv->add_option("file", in_path)->required();
    CLI::App* c_ts = app.add_subcommand("to-sbp", "convert an action to a semibiproduct");
    c_ts->add_option("file", in_path)->required();
    CLI::App* c_ta = app.add_subcommand("to-action", "convert a semibiproduct to an action");
    c_ta->add_option("file", in_path)->required();
    CLI::App* c_ck = app.add_subcommand("check", "check a property of a structure file");
    c_ck->add_option("property", prop)->required();
    c_ck->add_option("file", in_path)->required();
    CLI::App* c_en = app.add_subcommand("enumerate", "semibiproducts with fixed ends");
    c_en->add_option("--ends", ends, "end magma files: X.json B.json")
        ->expected(2)
        ->required();
    c_en->add_option("--middle-order", middle_order, "order of the middle object");
    c_en->add_option("--structure", structure, "filter for the middle object")
        ->check(CLI::IsMember({"magma", "semigroup", "monoid", "group"}));
    c_en->add_option("--dedup", dedup, "dedup convention")
        ->check(CLI::IsMember({"middle-iso", "labelled"}));
    c_en->add_flag("--list", list, "print each solution");
    CLI::App* c_cs = app.add_subcommand("census", "classify all small magma-actions");
    c_cs->add_option("--order", order, "carrier order for X and B");
    c_cs->add_flag("--list", list, "print each valid action with its flags");
    CLI::App* c_pr = app.add_subcommand("props", "kernel/cokernel-like universal properties");
    c_pr->add_flag("--kernel", want_kernel);
    c_pr->add_flag("--cokernel", want_cokernel);
    c_pr->add_option("--z-bound", z_bound, "max order of test semigroups Z");
    c_pr->add_option("file", in_path)->required();

    for (CLI::App* sub : {c_va, c_vs, c_dv, c_ts, c_ta, c_ck, c_en, c_cs, c_pr})
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const bool as_json = format == "json";
    try {
        if (app.got_subcommand(c_va)) {
            MagmaAction a = action_from_json(detail::load_json(in_path));
            ActionReport rep = verify_action(a);
            if (as_json)
                out << detail::action_report_json(rep).dump() << "\n";
            else if (rep.is_action)
                out << "valid\n";
            else
                out << "invalid: " << detail::action_failure_text(rep) << "\n";
            return rep.is_action ? 0 : 1;
        }
        if (app.got_subcommand(c_vs)) {
            Semibiproduct sb = sbp_from_json(detail::load_json(in_path));
            SbpReport rep = verify_sbp(sb);
            if (as_json)
                out << detail::sbp_report_json(rep).dump() << "\n";
            else if (rep.valid)
                out << "valid\n";
            else
                out << "invalid: " << detail::sbp_failure_text(rep) << "\n";
            return rep.valid ? 0 : 1;
        }
        if (app.got_subcommand(c_dv)) {
            Semibiproduct sb = sbp_from_json(detail::load_json(in_path));
            SbpReport rep = verify_sbp(sb);
            if (!rep.valid) {
                if (as_json)
                    out << detail::sbp_report_json(rep).dump() << "\n";
                else
                    out << "invalid: " << detail::sbp_failure_text(rep) << "\n";
                return 1;
            }
            PseudoActionData d = derive_tuple(sb);
            RMagma r = compute_R(to_action(sb));
            json j = derived_to_json(d, r);
            if (as_json) {
                out << j.dump() << "\n";
            } else {
                auto row_text = [&](const json& row) {
                    std::string s;
                    for (const auto& v : row) {
                        if (!s.empty()) s += " ";
                        s += v.dump();
                    }
                    return s;
                };
                out << "h: " << row_text(j["h"]) << "\n";
                out << "t: " << row_text(j["t"]) << "\n";
                for (const char* key : {"rho", "phi", "gamma"}) {
                    out << key << ":\n";
                    for (const auto& row : j[key]) out << "  " << row_text(row) << "\n";
                }
                out << "R:";
                for (const auto& pr : j["R"])
                    out << " (" << pr[0].dump() << "," << pr[1].dump() << ")";
                out << "\nR table:\n";
                for (const auto& row : j["R_table"]) out << "  " << row_text(row) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_ts)) {
            MagmaAction a = action_from_json(detail::load_json(in_path));
            ActionReport rep = verify_action(a);
            if (!rep.is_action) {
                if (as_json)
                    out << detail::action_report_json(rep).dump() << "\n";
                else
                    out << "invalid: " << detail::action_failure_text(rep) << "\n";
                return 1;
            }
            out << sbp_to_json(to_sbp(a)).dump() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_ta)) {
            Semibiproduct sb = sbp_from_json(detail::load_json(in_path));
            SbpReport rep = verify_sbp(sb);
            if (!rep.valid) {
                if (as_json)
                    out << detail::sbp_report_json(rep).dump() << "\n";
                else
                    out << "invalid: " << detail::sbp_failure_text(rep) << "\n";
                return 1;
            }
            out << action_to_json(to_action(sb)).dump() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_ck)) {
            json j = detail::load_json(in_path);
            detail::CheckResult res;
            switch (detail::detect_kind(j)) {
            case detail::FileKind::magma:
                res = detail::check_magma(prop, magma_from_json(j));
                break;
            case detail::FileKind::action:
                res = detail::check_action(prop, action_from_json(j));
                break;
            case detail::FileKind::semibiproduct:
                res = detail::check_sbp(prop, sbp_from_json(j));
                break;
            }
            if (as_json) {
                out << res.report.dump() << "\n";
            } else {
                out << (res.value ? "true" : "false") << "\n";
                for (const std::string& line : res.lines) out << line << "\n";
            }
            return res.value ? 0 : 1;
        }
        if (app.got_subcommand(c_en)) {
            EnumSpec spec;
            spec.x_end = magma_from_json(detail::load_json(ends[0]));
            spec.b_end = magma_from_json(detail::load_json(ends[1]));
            spec.middle_order = middle_order;
            if (structure == "magma") spec.structure_filter = StructureFilter::magma;
            else if (structure == "semigroup") spec.structure_filter = StructureFilter::semigroup;
            else if (structure == "monoid") spec.structure_filter = StructureFilter::monoid;
            else spec.structure_filter = StructureFilter::group;
            spec.dedup_mode = dedup == "labelled" ? DedupMode::none : DedupMode::iso;
            auto sols = enumerate_semibiproducts(spec, detail::default_workers());
            if (as_json) {
                json j{{"count", sols.size()}};
                if (list) {
                    json arr = json::array();
                    for (const auto& sb : sols) arr.push_back(sbp_to_json(sb));
                    j["solutions"] = arr;
                }
                out << j.dump() << "\n";
            } else {
                out << "count: " << sols.size() << "\n";
                if (list)
                    for (const auto& sb : sols) out << sbp_to_json(sb).dump() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_cs)) {
            std::vector<std::string> entries;
            auto on_valid = [&](const MagmaAction& a, CensusFlags f) {
                entries.push_back(json{{"action", action_to_json(a)},
                                       {"representable", f.representable},
                                       {"associative", f.associative}}
                                      .dump());
            };
            CensusSummary s = action_census(
                order, order, detail::default_workers(),
                list ? std::function<void(const MagmaAction&, CensusFlags)>(on_valid)
                     : std::function<void(const MagmaAction&, CensusFlags)>{});
            if (as_json) {
                out << json{{"total", s.total},
                            {"valid", s.valid},
                            {"representable", s.representable},
                            {"associative", s.associative},
                            {"representable_not_associative",
                             s.representable_not_associative}}
                           .dump()
                    << "\n";
            } else {
                out << "total: " << s.total << "\n"
                    << "valid: " << s.valid << "\n"
                    << "representable: " << s.representable << "\n"
                    << "associative: " << s.associative << "\n"
                    << "representable-not-associative: " << s.representable_not_associative
                    << "\n";
            }
            for (const std::string& line : entries) out << line << "\n";
            return 0;
        }
        if (app.got_subcommand(c_pr)) {
            Semibiproduct sb = sbp_from_json(detail::load_json(in_path));
            SbpReport rep = verify_sbp(sb);
            if (!rep.valid) {
                if (as_json)
                    out << detail::sbp_report_json(rep).dump() << "\n";
                else
                    out << "invalid: " << detail::sbp_failure_text(rep) << "\n";
                return 1;
            }
            if (!want_kernel && !want_cokernel) want_kernel = want_cokernel = true;
            std::vector<UniversalReport> reports;
            if (want_cokernel) reports.push_back(cokernel_property(sb, z_bound));
            if (want_kernel) reports.push_back(kernel_property(sb, z_bound));
            bool all_ok = true;
            json arr = json::array();
            for (const auto& r : reports) {
                const char* name = r.property == UniversalProperty::cokernel_like
                                       ? "cokernel-like"
                                       : "kernel-like";
                all_ok = all_ok && r.holds && r.construction_ok;
                if (as_json) {
                    arr.push_back({{"property", name},
                                   {"z_bound", r.z_bound},
                                   {"tested_homs", r.tested_homs},
                                   {"holds", r.holds},
                                   {"construction_ok", r.construction_ok}});
                } else {
                    out << "property: " << name << "\n"
                        << "z-bound: " << r.z_bound << "\n"
                        << "tested-homs: " << r.tested_homs << "\n"
                        << "holds: " << (r.holds ? "yes" : "no") << "\n"
                        << "construction: "
                        << (r.construction_ok ? "matches the proof" : "MISMATCH") << "\n";
                }
            }
            if (as_json) out << json{{"reports", arr}}.dump() << "\n";
            return all_ok ? 0 : 1;
        }
    } catch (const json::parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const schema_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace sbp::cli
