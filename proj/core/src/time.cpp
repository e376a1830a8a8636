#include "linmon/time.hpp"

#include <charconv>
#include <stdexcept>

namespace linmon {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole)
{
	std::int64_t out = 0;
	const auto *first = text.data();
	const auto *last = text.data() + text.size();
	auto [ptr, ec] = std::from_chars(first, last, out);
	if (text.empty() || ec != std::errc{} || ptr != last)
		throw std::invalid_argument("unparseable time '" + std::string(whole) + "'");
	return out;
}

} // namespace

TimeStamp TimeStamp::parse(std::string_view text)
{
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return TimeStamp(parse_integer(text, text));
	auto num = parse_integer(text.substr(0, slash), text);
	auto den = parse_integer(text.substr(slash + 1), text);
	if (den <= 0)
		throw std::invalid_argument("unparseable time '" + std::string(text) + "': denominator must be positive");
	return TimeStamp(num, den);
}

std::string TimeStamp::to_string() const
{
	if (is_integer())
		return std::to_string(value_.numerator());
	return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

} // namespace linmon
