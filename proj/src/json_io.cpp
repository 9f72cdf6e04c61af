#include "brace/json_io.hpp"

#include <fstream>
#include <sstream>

#include "brace/error.hpp"

namespace brace {

Json int_to_json(const Int& value)
{
    if (auto small = to_int64(value))
        return *small;
    return value.str();
}

Int int_from_json(const Json& value)
{
    if (value.is_number_integer())
        return value.is_number_unsigned() ? Int(value.get<std::uint64_t>()) : Int(value.get<std::int64_t>());
    if (value.is_string()) {
        try {
            return parse_int(value.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorCode::MalformedJson, e.what());
        }
    }
    throw Error(ErrorCode::MalformedJson, "expected an integer, got " + value.dump());
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::MalformedJson, std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::UnreadableFile, "cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

namespace {

const Json& field(const Json& doc, const char* name)
{
    if (!doc.is_object() || !doc.contains(name))
        throw Error(ErrorCode::MalformedJson, std::string("missing field '") + name + "'");
    return doc.at(name);
}

std::vector<std::vector<std::int64_t>> rows_from_json(const Json& doc, const char* name)
{
    const Json& rows = field(doc, name);
    if (!rows.is_array())
        throw Error(ErrorCode::MalformedJson, std::string("field '") + name + "' must be an array of arrays");
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& row : rows) {
        if (!row.is_array())
            throw Error(ErrorCode::MalformedJson, std::string("field '") + name + "' must be an array of arrays");
        auto& dest = out.emplace_back();
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw Error(ErrorCode::MalformedJson, std::string("field '") + name + "' has a non-integer entry");
            dest.push_back(v.get<std::int64_t>());
        }
    }
    return out;
}

std::size_t order_from_json(const Json& doc)
{
    const Json& order = field(doc, "order");
    if (!order.is_number_integer() || order.get<std::int64_t>() < 1)
        throw Error(ErrorCode::MalformedJson, "field 'order' must be a positive integer");
    return order.get<std::size_t>();
}

void check_order(const Table& table, std::size_t order, const char* name)
{
    if (table.order() != order)
        throw Error(ErrorCode::MalformedTable, std::string("table '") + name + "' has "
                                                   + std::to_string(table.order()) + " rows but order is "
                                                   + std::to_string(order));
}

Json indices(const std::vector<Index>& xs)
{
    Json out = Json::array();
    for (Index x : xs)
        out.push_back(x);
    return out;
}

} // namespace

Json to_json(const FiniteBrace& brace)
{
    return Json{{"order", brace.order()}, {"add", brace.add_table().rows()}, {"mul", brace.mul_table().rows()}};
}

FiniteBrace brace_from_json(const Json& doc)
{
    const auto order = order_from_json(doc);
    auto add = Table::from_rows(rows_from_json(doc, "add"));
    auto mul = Table::from_rows(rows_from_json(doc, "mul"));
    check_order(add, order, "add");
    check_order(mul, order, "mul");
    return FiniteBrace(std::move(add), std::move(mul));
}

std::vector<FiniteBrace> braces_from_json(const Json& doc)
{
    const Json* list = &doc;
    if (doc.is_object() && doc.contains("braces"))
        list = &doc.at("braces");
    std::vector<FiniteBrace> out;
    if (list->is_array()) {
        for (const auto& item : *list)
            out.push_back(brace_from_json(item));
    } else {
        out.push_back(brace_from_json(*list));
    }
    return out;
}

Json to_json(const LambdaAction& action)
{
    Json lambda = Json::array();
    for (const auto& row : action.lambda_table())
        lambda.push_back(indices(row));
    return Json{{"order", action.order()}, {"add", action.add_table().rows()}, {"lambda", lambda}};
}

LambdaAction action_from_json(const Json& doc)
{
    const auto order = order_from_json(doc);
    Table add;
    if (doc.contains("group")) {
        if (!doc.at("group").is_string())
            throw Error(ErrorCode::MalformedJson, "field 'group' must be a signature string such as \"2x2\"");
        add = cyclic_product_table(GroupSignature::parse(doc.at("group").get<std::string>()));
    } else {
        add = Table::from_rows(rows_from_json(doc, "add"));
    }
    check_order(add, order, "add");
    std::vector<Permutation> lambda;
    for (const auto& row : rows_from_json(doc, "lambda")) {
        auto& dest = lambda.emplace_back();
        for (auto v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= order)
                throw Error(ErrorCode::MalformedTable, "lambda entry " + std::to_string(v) + " out of range");
            dest.push_back(static_cast<Index>(v));
        }
    }
    return LambdaAction(std::move(add), std::move(lambda));
}

Json to_json(const FreeCElement& x)
{
    Json out = Json::object();
    for (const auto& [i, v] : x.coeffs())
        out[i.str()] = int_to_json(v);
    return out;
}

FreeCElement free_c_from_json(const Json& doc)
{
    if (!doc.is_object())
        throw Error(ErrorCode::MalformedJson, "a C element is an object mapping indices to coefficients, e.g. {\"0\": 1}");
    FreeCElement::Coeffs coeffs;
    for (const auto& [key, value] : doc.items()) {
        Int index;
        try {
            index = parse_int(key);
        } catch (const Error&) {
            throw Error(ErrorCode::MalformedJson, "index '" + key + "' is not a signed decimal integer");
        }
        coeffs[index] += int_from_json(value);
    }
    return FreeCElement(std::move(coeffs));
}

Json to_json(const BmElement& x)
{
    Json out = Json::array();
    for (const auto& v : x.coords())
        out.push_back(int_to_json(v));
    return out;
}

BmElement bm_from_json(const Json& doc, std::optional<std::size_t> expected_m)
{
    if (!doc.is_array())
        throw Error(ErrorCode::MalformedJson, "a B_m element is an array of integers, e.g. [1,0]");
    std::vector<Int> coords;
    for (const auto& v : doc)
        coords.push_back(int_from_json(v));
    if (expected_m && coords.size() != *expected_m)
        throw Error(ErrorCode::RankMismatch, "element has " + std::to_string(coords.size())
                                                 + " coordinates but --m is " + std::to_string(*expected_m));
    return BmElement(std::move(coords));
}

Json to_json(const AdditiveSubgroup& group) { return indices(group.members()); }

Json to_json(const LawCheck& law)
{
    Json out{{"holds", law.holds}};
    if (!law.holds) {
        out["witness"] = indices(law.witness);
        out["detail"] = law.detail;
    }
    return out;
}

Json to_json(const AxiomReport& report)
{
    return Json{{"ok", report.ok()},
                {"additive_group", to_json(report.additive_group)},
                {"multiplicative_group", to_json(report.multiplicative_group)},
                {"distributivity", to_json(report.distributivity)},
                {"lambda_homomorphism", to_json(report.lambda_homomorphism)}};
}

Json to_json(const ActionReport& report)
{
    return Json{{"ok", report.ok()},
                {"additive_group", to_json(report.additive_group)},
                {"automorphisms", to_json(report.automorphisms)},
                {"additive_homomorphism", to_json(report.additive_homomorphism)},
                {"invariance", to_json(report.invariance)}};
}

Json to_json(const Rn2Conditions& conditions)
{
    return Json{{"values", conditions.holds},
                {"all_equal", conditions.all_equal()},
                {"right_class_at_most_two", conditions.holds[0]}};
}

Json to_json(const SeriesReport& report)
{
    Json right = Json::array();
    for (const auto& g : report.right_series)
        right.push_back(to_json(g));
    Json left = Json::array();
    for (const auto& g : report.left_series)
        left.push_back(to_json(g));
    Json out{{"right_series", right}, {"left_series", left}, {"socle", to_json(report.socle)}};
    out["right_class"] = report.right_class ? Json(*report.right_class) : Json(nullptr);
    out["left_class"] = report.left_class ? Json(*report.left_class) : Json(nullptr);
    return out;
}

Json to_json(const HomReport& report)
{
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses)
        witnesses.push_back(Json{{"law", w.law}, {"x", w.x}, {"y", w.y}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    return Json{{"ok", report.ok()},
                {"zero_ok", report.zero_ok},
                {"additive_ok", report.additive_ok},
                {"multiplicative_ok", report.multiplicative_ok},
                {"star_ok", report.star_ok},
                {"image_ok", report.image_ok},
                {"uniqueness_ok", report.uniqueness_ok},
                {"source", report.source},
                {"sample", report.sample},
                {"elements_sampled", report.elements_sampled},
                {"pairs_checked", report.pairs_checked},
                {"image", indices(report.image)},
                {"expected_image", indices(report.expected_image)},
                {"witnesses", witnesses}};
}

Json to_json(const EnumerationResult& result)
{
    Json braces = Json::array();
    for (const auto& b : result.braces)
        braces.push_back(to_json(b));
    return Json{{"summary",
                 {{"signature", result.signature.to_string()},
                  {"candidates_scanned", result.candidates_scanned},
                  {"valid_actions", result.actions.size()},
                  {"distinct_braces", result.braces.size()}}},
                {"braces", braces}};
}

} // namespace brace
