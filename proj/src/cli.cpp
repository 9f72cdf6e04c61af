#include "brace/cli.hpp"

#include <algorithm>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "brace/error.hpp"
#include "brace/json_io.hpp"

namespace brace::cli {

namespace {

Json wrap_result(Json value) { return Json{{"result", std::move(value)}}; }

std::string read_argument(const std::string& text)
{
    // Allow "@file" to pass an element stored in a file.
    if (!text.empty() && text.front() == '@')
        return read_json_file(text.substr(1)).dump();
    return text;
}

void require_count(const std::vector<std::string>& args, std::size_t count, const std::string& usage)
{
    if (args.size() != count)
        throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(count) + " argument(s): " + usage);
}

Json run_bm(const std::string& op, std::size_t m, const std::vector<std::string>& args)
{
    auto elem = [&](std::size_t i) { return bm_from_json(parse_json_text(read_argument(args[i])), m); };
    if (op == "mul" || op == "star" || op == "lambda") {
        require_count(args, 2, "<elem> <elem>");
        const auto x = elem(0);
        const auto y = elem(1);
        if (op == "mul")
            return wrap_result(to_json(mul_bm(x, y)));
        if (op == "star")
            return wrap_result(to_json(star_bm(x, y)));
        return wrap_result(to_json(lambda_bm(x, y)));
    }
    if (op == "inv") {
        require_count(args, 1, "<elem>");
        return wrap_result(to_json(inv_bm(elem(0))));
    }
    if (op == "pow") {
        require_count(args, 2, "<elem> <n>");
        return wrap_result(to_json(power_bm(elem(0), parse_int(args[1]))));
    }
    if (op == "powers") {
        require_count(args, 1, "<elem>");
        Json out = Json::array();
        for (const auto& p : star_powers(elem(0)))
            out.push_back(to_json(p));
        return wrap_result(out);
    }
    if (op == "na-star") {
        require_count(args, 3, "<n> <j> <elem>");
        const auto j = parse_int(args[1]);
        if (j < 1 || j > m)
            throw Error(ErrorCode::InvalidArgument, "j must lie in 1..m");
        const auto a = bm_from_json(parse_json_text(read_argument(args[2])), m);
        return wrap_result(to_json(na_star_aj(parse_int(args[0]), static_cast<std::size_t>(j), a)));
    }
    if (op == "filtration") {
        if (args.empty() || args.size() > 2)
            throw Error(ErrorCode::InvalidArgument, "expected arguments: <r> [<elem>]");
        const auto r = to_int64(parse_int(args[0]));
        if (!r)
            throw Error(ErrorCode::InvalidArgument, "r out of range");
        const auto f = filtration(*r, m);
        Json basis = Json::array();
        for (const auto& e : f.basis())
            basis.push_back(to_json(e));
        Json out{{"r", *r}, {"m", m}, {"description", f.describe()}, {"basis", basis}};
        if (args.size() == 2)
            out["contains"] = f.contains(elem(1));
        return wrap_result(out);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown bm operation '" + op + "'");
}

Json run_freec(const std::string& op, const std::vector<std::string>& args)
{
    auto elem = [&](std::size_t i) { return free_c_from_json(parse_json_text(read_argument(args[i]))); };
    if (op == "mul" || op == "star" || op == "lambda") {
        require_count(args, 2, "<elem> <elem>");
        const auto x = elem(0);
        const auto y = elem(1);
        if (op == "mul")
            return wrap_result(to_json(mul_c(x, y)));
        if (op == "star")
            return wrap_result(to_json(star_c(x, y)));
        return wrap_result(to_json(lambda_c(x, y)));
    }
    if (op == "inv") {
        require_count(args, 1, "<elem>");
        return wrap_result(to_json(inv_c(elem(0))));
    }
    if (op == "pow") {
        require_count(args, 2, "<elem> <n>");
        return wrap_result(to_json(power_c(elem(0), parse_int(args[1]))));
    }
    if (op == "weight") {
        require_count(args, 1, "<elem>");
        return wrap_result(int_to_json(weight(elem(0))));
    }
    if (op == "s") {
        require_count(args, 1, "<j>");
        const auto j = to_int64(parse_int(args[0]));
        if (!j)
            throw Error(ErrorCode::InvalidArgument, "j out of range");
        return wrap_result(to_json(s_sequence(*j)));
    }
    if (op == "decompose") {
        require_count(args, 1, "<elem>");
        Json out = Json::array();
        for (const auto& [i, v] : express_in_star_generators(elem(0)))
            out.push_back(Json::array({int_to_json(i), int_to_json(v)}));
        return wrap_result(out);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown freec operation '" + op + "'");
}

// One report per brace; a file holding several braces yields an array.
template <class Fn>
Json per_brace(const std::string& path, Fn fn)
{
    const Json doc = read_json_file(path);
    const auto braces = braces_from_json(doc);
    const bool many = doc.is_array() || (doc.is_object() && doc.contains("braces"));
    if (!many)
        return fn(braces.front());
    Json out = Json::array();
    for (const auto& b : braces)
        out.push_back(fn(b));
    return Json{{"braces", out}};
}

Json verify_one(const FiniteBrace& brace)
{
    const auto axioms = verify_axioms(brace);
    Json out{{"order", brace.order()}, {"axioms", to_json(axioms)}, {"ok", axioms.ok()}};
    if (axioms.ok()) {
        out["conditions"] = to_json(check_rn2_conditions(brace));
        out["two_of_three"] = two_of_three(brace);
    }
    return out;
}

Json series_one(const FiniteBrace& brace)
{
    Json out = to_json(analyze_series(brace));
    out["order"] = brace.order();
    return out;
}

Json conditions_one(const FiniteBrace& brace)
{
    Json out = to_json(check_rn2_conditions(brace));
    out["order"] = brace.order();
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations in left braces of right nilpotency class at most two", "brace"};
    app.require_subcommand(1);

    std::string op;
    std::size_t m = 0;
    auto* bm = app.add_subcommand("bm", "Arithmetic in the free brace B_m (elements are JSON arrays)");
    bm->add_option("op", op, "mul | star | lambda | inv | pow | powers | na-star | filtration")->required();
    bm->add_option("--m", m, "rank m >= 2")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    // Operands are taken from the leftovers so that JSON arrays reach us unsplit.
    bm->allow_extras();
    bm->footer("Operands: elements, exponents or indices.");

    auto* freec = app.add_subcommand("freec", "Arithmetic in the free brace C (elements are JSON index maps)");
    freec->add_option("op", op, "mul | star | lambda | inv | pow | weight | s | decompose")->required();
    freec->allow_extras();
    freec->footer("Operands: elements or integers.");

    std::string path;
    auto* verify = app.add_subcommand("verify", "Check brace axioms and the class-two conditions");
    verify->add_option("file", path, "brace JSON file")->required();
    auto* series = app.add_subcommand("series", "Right and left series, classes and socle");
    series->add_option("file", path, "brace JSON file")->required();
    auto* conditions = app.add_subcommand("conditions", "The five class-two conditions");
    conditions->add_option("file", path, "brace JSON file")->required();
    auto* build = app.add_subcommand("build", "Build the brace xy = x + lambda_x(y) from an action file");
    build->add_option("file", path, "action JSON file")->required();

    std::string group;
    std::size_t cap = kDefaultEnumerationCap;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate invariant actions of a finite abelian group");
    enumerate->add_option("--group", group, "signature such as 4 or 2x2")->required();
    enumerate->add_option("--cap", cap, "largest group order accepted");

    std::string kind;
    std::string target_path;
    Index image = 0;
    std::int64_t range = -1;
    auto* hom = app.add_subcommand("hom", "Universal homomorphism from B_m or C into a finite brace");
    hom->add_option("kind", kind, "bm | c")->required()->check(CLI::IsMember({"bm", "c"}));
    hom->add_option("--target", target_path, "target brace JSON file")->required();
    hom->add_option("--image", image, "image of the generator")->required();
    hom->add_option("--m", m, "rank for bm (default: max(2, left class))");
    hom->add_option("--range", range, "coordinates / support in [-R, R] (default: target order)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        out << Json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }

    try {
        Json result;
        if (*bm) {
            result = run_bm(op, m, bm->remaining());
        } else if (*freec) {
            result = run_freec(op, freec->remaining());
        } else if (*verify) {
            result = per_brace(path, verify_one);
        } else if (*series) {
            result = per_brace(path, series_one);
        } else if (*conditions) {
            result = per_brace(path, conditions_one);
        } else if (*build) {
            const auto action = action_from_json(read_json_file(path));
            const auto report = validate_action(action);
            if (!report.ok())
                throw Error(ErrorCode::PreconditionFailed, "invalid action: " + report.summary());
            result = Json{{"action", to_json(report)}, {"brace", to_json(build_brace(action))}};
        } else if (*enumerate) {
            result = to_json(enumerate_actions(GroupSignature::parse(group), cap));
        } else if (*hom) {
            auto target = std::make_shared<const FiniteBrace>(brace_from_json(read_json_file(target_path)));
            SampleSpec spec;
            spec.range = range >= 0 ? range : static_cast<std::int64_t>(target->order());
            if (kind == "bm") {
                if (m == 0) {
                    const auto left = left_series(*target);
                    m = std::max<std::size_t>(2, left.size() - 1);
                }
                const auto h = hom_from_Bm(target, image, m);
                result = Json{{"m", m}, {"report", to_json(verify_hom(h, spec))}};
            } else {
                spec.coeff_bound = 2;
                spec.max_terms = 2;
                const auto h = hom_from_C(target, image);
                result = Json{{"report", to_json(verify_hom(h, spec))}};
            }
        }
        out << result.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        out << Json{{"error", {{"code", std::string(to_string(e.code())).c_str()}, {"message", e.what()}}}}.dump()
            << "\n";
        return 1;
    }
}

} // namespace brace::cli
