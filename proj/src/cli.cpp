#include "genflag/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "genflag/action.hpp"
#include "genflag/verify.hpp"

namespace genflag {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SchemaArgs {
    std::string scenario;
    std::string schema_file;

    FlagSchema load() const {
        require(!scenario.empty() || !schema_file.empty(),
                "one of --scenario or --schema is required");
        require(scenario.empty() || schema_file.empty(),
                "--scenario and --schema are mutually exclusive");
        if (!scenario.empty()) return get_scenario(scenario).schema;
        return schema_from_json(parse_document(slurp(schema_file)));
    }

    IndexInterval default_window(const FlagSchema& s) const {
        if (!scenario.empty()) return get_scenario(scenario).default_window;
        if (s.family == CutFamily::FiniteCuts) {
            IndexInterval w{s.cuts.front(), s.cuts.back()};
            return w.extend(s.index_schema, 2);
        }
        return normalize_interval(s.index_schema, -2, 2);
    }
};

void add_schema_flags(CLI::App* cmd, SchemaArgs& args) {
    cmd->add_option("--scenario", args.scenario, "built-in scenario name");
    cmd->add_option("--schema", args.schema_file, "schema document file");
}

IndexInterval parse_window_flag(const std::string& text, const IndexSchema& ord) {
    auto colon = text.find(':');
    require(colon != std::string::npos, "--window expects lo:hi");
    try {
        long lo = std::stol(text.substr(0, colon));
        long hi = std::stol(text.substr(colon + 1));
        return normalize_interval(ord, lo, hi);
    } catch (const std::logic_error&) {
        throw bad_input("--window expects integer bounds lo:hi");
    }
}

FlagPoint load_point(const std::string& source, const FlagSchema& schema,
                     const IndexInterval& window) {
    if (source == "reference") return reference_point(schema, window);
    return point_from_json(parse_document(slurp(source)), schema);
}

void emit(const Json& doc, std::ostream& out, const std::string& out_file) {
    std::string text = doc.dump(2) + "\n";
    out << text;
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        require(f.good(), "cannot write file: " + out_file);
        f << text;
    }
}

FormSchema form_for_group(const FlagSchema& s, const std::string& group,
                          const std::string& form_flag) {
    if (!form_flag.empty()) {
        FormSchema form{form_from_name(form_flag)};
        require(form.index_kind() == s.index_schema.kind,
                "declared form does not match the schema's index order");
        bool orth = form.kind != FormKind::SymplecticSatoSplit;
        require(orth == (group == "orthogonal"), "declared form does not match the group");
        return form;
    }
    if (group == "orthogonal") {
        if (s.index_schema.kind == IndexKind::AllInts) return FormSchema{FormKind::OrthogonalAllInts};
        if (s.index_schema.kind == IndexKind::SatoSplit)
            return FormSchema{FormKind::OrthogonalSatoSplit};
        throw bad_input("orthogonal pairing needs a paired index order");
    }
    require(s.index_schema.kind == IndexKind::SatoSplit,
            "symplectic pairing needs the sato_split order");
    return FormSchema{FormKind::SymplecticSatoSplit};
}

int do_member(const SchemaArgs& sa, const std::string& group, const std::string& op_file,
              const std::string& point_spec, const std::string& window_flag,
              const std::string& form_flag, const std::string& out_file, std::ostream& out) {
    FlagSchema schema = sa.load();
    StructuredOperator f = operator_from_json(parse_document(slurp(op_file)), schema);
    bool member = false;
    if (group == "mackey") {
        // Window-plus-tail operators satisfy the pairing conditions at every
        // cut by construction.
        member = true;
    } else if (group == "eventually-identity") {
        member = is_eventually_identity(f);
    } else if (group == "w-aligned") {
        member = is_w_aligned(f);
    } else if (group == "eligible") {
        member = is_eligible(f);
    } else if (group == "stabilizer") {
        IndexInterval w = window_flag.empty() ? sa.default_window(schema)
                                              : parse_window_flag(window_flag, schema.index_schema);
        FlagPoint p = load_point(point_spec.empty() ? "reference" : point_spec, schema, w);
        member = in_stabilizer(f, p);
    } else if (group == "orthogonal" || group == "symplectic") {
        member = preserves_form(f, form_for_group(schema, group, form_flag));
    } else {
        throw bad_input("unknown group: " + group +
                        " (known: mackey, eventually-identity, w-aligned, eligible, "
                        "stabilizer, orthogonal, symplectic)");
    }
    emit(Json{{"command", "member"}, {"group", group}, {"member", member}}, out, out_file);
    return member ? 0 : 1;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with generalized flags and their operator groups"};
    app.require_subcommand(1);

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "check and normalize documents");
    SchemaArgs validate_schema_args;
    std::string validate_op, validate_point, validate_out;
    add_schema_flags(validate_cmd, validate_schema_args);
    validate_cmd->add_option("--op", validate_op, "operator document");
    validate_cmd->add_option("--point", validate_point, "point document");
    validate_cmd->add_option("--out", validate_out, "write the normalized report here");

    // member
    auto* member_cmd = app.add_subcommand("member", "matrix-group membership predicates");
    SchemaArgs member_schema_args;
    std::string member_group, member_op, member_point, member_window, member_form, member_out;
    add_schema_flags(member_cmd, member_schema_args);
    member_cmd->add_option("--group", member_group, "group name")->required();
    member_cmd->add_option("--op", member_op, "operator document")->required();
    member_cmd->add_option("--point", member_point, "point document or 'reference'");
    member_cmd->add_option("--window", member_window, "reference window lo:hi");
    member_cmd->add_option("--form", member_form, "pairing kind for orthogonal/symplectic");
    member_cmd->add_option("--out", member_out, "write the report here");

    // degree
    auto* degree_cmd = app.add_subcommand("degree", "degree grading of an operator");
    SchemaArgs degree_schema_args;
    std::string degree_op, degree_out;
    add_schema_flags(degree_cmd, degree_schema_args);
    degree_cmd->add_option("--op", degree_op, "operator document")->required();
    degree_cmd->add_option("--out", degree_out, "write the report here");

    // act
    auto* act_cmd = app.add_subcommand("act", "apply an operator to a flag point");
    SchemaArgs act_schema_args;
    std::string act_op, act_point = "reference", act_window, act_out;
    bool act_direct_flag = false;
    add_schema_flags(act_cmd, act_schema_args);
    act_cmd->add_option("--op", act_op, "operator document")->required();
    act_cmd->add_option("--point", act_point, "point document or 'reference'");
    act_cmd->add_flag("--direct", act_direct_flag, "use the direct-image oracle");
    act_cmd->add_option("--window", act_window, "reference window lo:hi");
    act_cmd->add_option("--out", act_out, "write the resulting point here");

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "dual schema, or the duality involution");
    SchemaArgs dual_schema_args;
    std::string dual_point, dual_window, dual_out;
    add_schema_flags(dual_cmd, dual_schema_args);
    dual_cmd->add_option("--point", dual_point, "point document or 'reference'");
    dual_cmd->add_option("--window", dual_window, "reference window lo:hi");
    dual_cmd->add_option("--out", dual_out, "write the report here");

    // symmetric
    auto* sym_cmd = app.add_subcommand("symmetric", "symmetry of the reference flag");
    SchemaArgs sym_schema_args;
    std::string sym_out;
    add_schema_flags(sym_cmd, sym_schema_args);
    sym_cmd->add_option("--out", sym_out, "write the report here");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
    std::string verify_suite, verify_out;
    std::uint64_t verify_seed = 0;
    long verify_trials = 200;
    verify_cmd->add_option("suite", verify_suite, "suite name")->required();
    verify_cmd->add_option("--seed", verify_seed, "master seed");
    verify_cmd->add_option("--trials", verify_trials, "trials per property");
    verify_cmd->add_option("--out", verify_out, "write the report here");

    std::vector<const char*> argv;
    argv.push_back("genflag");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*validate_cmd) {
            FlagSchema schema = validate_schema_args.load();
            Json report{{"command", "validate"}, {"ok", true}};
            report["schema"] = schema_to_json(schema)["schema"];
            if (!validate_op.empty()) {
                StructuredOperator f = operator_from_json(parse_document(slurp(validate_op)), schema);
                report["operator"] = operator_to_json(f)["operator"];
            }
            if (!validate_point.empty()) {
                FlagPoint p = point_from_json(parse_document(slurp(validate_point)), schema);
                report["point"] = point_to_json(p)["point"];
            }
            emit(report, out, validate_out);
            return 0;
        }
        if (*member_cmd) {
            return do_member(member_schema_args, member_group, member_op, member_point,
                             member_window, member_form, member_out, out);
        }
        if (*degree_cmd) {
            FlagSchema schema = degree_schema_args.load();
            StructuredOperator f = operator_from_json(parse_document(slurp(degree_op)), schema);
            DegreeReport dr = degree_report(f);
            Json per_cut = Json::array();
            for (const auto& [cut, deg] : dr.per_cut)
                per_cut.push_back(Json{{"after", cut.after}, {"degree", deg}});
            emit(Json{{"command", "degree"},
                      {"per_cut", std::move(per_cut)},
                      {"uniform_tail_degree", dr.uniform_tail_degree}},
                 out, degree_out);
            return 0;
        }
        if (*act_cmd) {
            FlagSchema schema = act_schema_args.load();
            StructuredOperator f = operator_from_json(parse_document(slurp(act_op)), schema);
            IndexInterval w = act_window.empty()
                                  ? act_schema_args.default_window(schema)
                                  : parse_window_flag(act_window, schema.index_schema);
            FlagPoint p = load_point(act_point, schema, w);
            FlagPoint q = act_direct_flag ? act_direct(f, p) : act(f, p);
            Json report{{"command", "act"}, {"direct", act_direct_flag}};
            report["point"] = point_to_json(q)["point"];
            emit(report, out, act_out);
            return 0;
        }
        if (*dual_cmd) {
            FlagSchema schema = dual_schema_args.load();
            Json report{{"command", "dual"}};
            if (dual_point.empty()) {
                report["schema"] = schema_to_json(dual_schema(schema))["schema"];
            } else {
                IndexInterval w = dual_window.empty()
                                      ? dual_schema_args.default_window(schema)
                                      : parse_window_flag(dual_window, schema.index_schema);
                FlagPoint p = load_point(dual_point, schema, w);
                report["point"] = point_to_json(duality_map(p))["point"];
            }
            emit(report, out, dual_out);
            return 0;
        }
        if (*sym_cmd) {
            FlagSchema schema = sym_schema_args.load();
            bool sym = is_symmetric(schema);
            emit(Json{{"command", "symmetric"}, {"symmetric", sym}}, out, sym_out);
            return sym ? 0 : 1;
        }
        if (*verify_cmd) {
            SuiteReport rep = run_suite(verify_suite, verify_seed, verify_trials);
            emit(rep.to_json(), out, verify_out);
            return rep.all_pass() ? 0 : 1;
        }
        throw bad_input("no command given");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const bad_input& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace genflag
