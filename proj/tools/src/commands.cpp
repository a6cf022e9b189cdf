#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "io.hpp"
#include "lct/errors.hpp"
#include "lct/greedy.hpp"
#include "render.hpp"

namespace lct::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw ParseError("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int not_in_cone(std::ostream& out, const std::optional<Violation>& violation) {
    Json error;
    error["type"] = "not_in_cone";
    if (violation) {
        error["violation"] = violation_to_json(*violation);
    }
    Json doc;
    doc["error"] = std::move(error);
    emit(out, doc);
    return 3;
}

int cmd_decompose(const Json& input, std::ostream& out) {
    const MPoint point = input_point(input);
    if (auto violation = membership(point)) {
        return not_in_cone(out, violation);
    }
    const DeltaTable table = point.to_delta();
    Decomposition dec;
    try {
        dec = decompose(table);
    } catch (const NotInCone&) {
        return not_in_cone(out, membership(point));
    }
    Json doc = decomposition_to_json(dec);
    doc["verified"] = recombine(dec) == table;
    emit(out, doc);
    return 0;
}

int cmd_check(const Json& input, std::ostream& out) {
    const MPoint point = input_point(input);
    Json doc;
    if (auto violation = membership(point)) {
        doc["member"] = false;
        doc["violation"] = violation_to_json(*violation);
    } else {
        doc["member"] = true;
    }
    emit(out, doc);
    return 0;
}

int cmd_facet_decompose(const Json& input, std::ostream& out) {
    const MPoint point = input_point(input);
    if (auto violation = membership(point)) {
        return not_in_cone(out, violation);
    }
    const auto terms = facet_decompose(point);
    Json doc = generator_terms_to_json(terms);
    doc["verified"] = recombine_generators(terms) == point;
    emit(out, doc);
    return 0;
}

int cmd_make_table(const Json& input, std::ostream& out, bool plain) {
    const DeltaTable table = combine(spec_terms_from_json(input));
    const RawWindow window = render_window(table);
    if (plain) {
        out << render_plain(window);
    } else {
        emit(out, table_to_json(window));
    }
    return 0;
}

int cmd_delta(const Json& input, std::ostream& out, bool plain) {
    const MPoint point = input_point(input);
    if (plain) {
        out << render_plain(point);
    } else {
        emit(out, point_to_json(point));
    }
    return 0;
}

int cmd_incidence(int d, std::ostream& out) {
    emit(out, incidence_to_json(incidence(d)));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact decomposition toolkit for graded local cohomology tables"};
    app.require_subcommand(1);
    bool plain = false;
    app.add_flag("--plain", plain, "render tables in the transposed row layout");

    struct {
        std::string decompose_file, check_file, facet_file, make_file, delta_file;
        int incidence_d = 0;
    } opts;

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "decompose a table into extremal tables");
    decompose_cmd->add_option("input", opts.decompose_file, "table document (default stdin)");
    CLI::App* check_cmd = app.add_subcommand("check", "test cone membership");
    check_cmd->add_option("input", opts.check_file, "table or point document (default stdin)");
    CLI::App* facet_cmd =
        app.add_subcommand("facet-decompose", "decompose a point into cone generators");
    facet_cmd->add_option("input", opts.facet_file, "table or point document (default stdin)");
    CLI::App* make_cmd = app.add_subcommand("make-table", "build a table from a module spec");
    make_cmd->add_option("input", opts.make_file, "module spec document (default stdin)");
    CLI::App* delta_cmd = app.add_subcommand("delta", "difference image of a table");
    delta_cmd->add_option("input", opts.delta_file, "table document (default stdin)");
    CLI::App* incidence_cmd = app.add_subcommand("incidence", "ray/facet incidence data");
    incidence_cmd->add_option("d", opts.incidence_d, "window width")
        ->required()
        ->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> cli_args(args.rbegin(), args.rend());
        app.parse(cli_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (decompose_cmd->parsed()) {
            return cmd_decompose(parse_document(read_input(opts.decompose_file, in)), out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(parse_document(read_input(opts.check_file, in)), out);
        }
        if (facet_cmd->parsed()) {
            return cmd_facet_decompose(parse_document(read_input(opts.facet_file, in)), out);
        }
        if (make_cmd->parsed()) {
            return cmd_make_table(parse_document(read_input(opts.make_file, in)), out, plain);
        }
        if (delta_cmd->parsed()) {
            return cmd_delta(parse_document(read_input(opts.delta_file, in)), out, plain);
        }
        if (incidence_cmd->parsed()) {
            return cmd_incidence(opts.incidence_d, out);
        }
    } catch (const NotInCone&) {
        return not_in_cone(out, std::nullopt);
    } catch (const Error& e) {
        Json doc;
        doc["error"] = {{"type", "invalid_input"}, {"message", e.what()}};
        emit(out, doc);
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace lct::cli
