#include "linmon/history_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace linmon {

using nlohmann::json;

namespace {

TimeStamp parse_time(const json &node, const char *field, const std::string &id)
{
	if (!node.contains(field))
		throw HistoryError(std::string("missing field '") + field + "'", id);
	const auto &t = node.at(field);
	try {
		if (t.is_number_integer())
			return TimeStamp(t.get<std::int64_t>());
		if (t.is_string())
			return TimeStamp::parse(t.get<std::string>());
	} catch (const std::invalid_argument &e) {
		throw HistoryError(e.what(), id);
	}
	throw HistoryError(std::string("unparseable time in '") + field + "'", id);
}

Operation parse_operation(const json &node)
{
	if (!node.is_object())
		throw HistoryError("operation must be an object");
	if (!node.contains("id") || !node.at("id").is_string())
		throw HistoryError("operation without string 'id'");
	Operation op;
	op.id = node.at("id").get<std::string>();

	if (!node.contains("method") || !node.at("method").is_string())
		throw HistoryError("missing string field 'method'", op.id);
	auto method = parse_method(node.at("method").get<std::string>());
	if (!method)
		throw HistoryError("unknown method '" + node.at("method").get<std::string>() + "'", op.id);
	op.method = *method;

	if (node.contains("value") && !node.at("value").is_null()) {
		if (!node.at("value").is_number_integer())
			throw HistoryError("'value' must be an integer or null", op.id);
		op.value = Value::concrete(node.at("value").get<std::int64_t>());
	}

	if (node.contains("aux") && !node.at("aux").is_null()) {
		const auto &aux = node.at("aux");
		if (aux.is_boolean())
			op.aux = aux.get<bool>();
		else if (aux.is_number_integer())
			op.aux = aux.get<std::int64_t>();
		else
			throw HistoryError("'aux' must be an integer, boolean or null", op.id);
	}

	op.inv = parse_time(node, "inv", op.id);
	op.res = parse_time(node, "res", op.id);
	return op;
}

json time_to_json(const TimeStamp &t)
{
	if (t.is_integer())
		return t.numerator();
	return t.to_string();
}

} // namespace

History parse_history(std::string_view text)
{
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error &e) {
		throw HistoryError(std::string("malformed JSON: ") + e.what());
	}
	if (!doc.is_object())
		throw HistoryError("top-level value must be an object");
	if (!doc.contains("adt") || !doc.at("adt").is_string())
		throw HistoryError("missing string field 'adt'");
	auto kind = parse_adt_kind(doc.at("adt").get<std::string>());
	if (!kind)
		throw HistoryError("unknown adt '" + doc.at("adt").get<std::string>() + "'");
	if (!doc.contains("operations") || !doc.at("operations").is_array())
		throw HistoryError("missing array field 'operations'");

	History h;
	h.kind = *kind;
	for (const auto &node : doc.at("operations"))
		h.ops.push_back(parse_operation(node));
	require_valid(h);
	return h;
}

History load_history(const std::filesystem::path &path)
{
	std::ifstream in(path);
	if (!in)
		throw HistoryError("cannot read '" + path.string() + "'");
	std::stringstream buffer;
	buffer << in.rdbuf();
	return parse_history(buffer.str());
}

std::string serialize_history(const History &h, int indent)
{
	json ops = json::array();
	for (const auto &op : h.ops) {
		if (op.value.is_bottom())
			throw HistoryError("bottom values cannot be serialized", op.id);
		json node;
		node["id"] = op.id;
		node["method"] = std::string(to_string(op.method));
		node["value"] = op.value.is_concrete() ? json(op.value.get()) : json(nullptr);
		if (!op.aux)
			node["aux"] = nullptr;
		else if (std::holds_alternative<bool>(*op.aux))
			node["aux"] = std::get<bool>(*op.aux);
		else
			node["aux"] = std::get<std::int64_t>(*op.aux);
		node["inv"] = time_to_json(op.inv);
		node["res"] = time_to_json(op.res);
		ops.push_back(std::move(node));
	}
	json doc;
	doc["adt"] = std::string(to_string(h.kind));
	doc["operations"] = std::move(ops);
	return doc.dump(indent);
}

void save_history(const History &h, const std::filesystem::path &path)
{
	std::ofstream out(path);
	if (!out)
		throw HistoryError("cannot write '" + path.string() + "'");
	out << serialize_history(h) << '\n';
}

} // namespace linmon
