#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace linmon {

/// Exact non-negative rational logical time. Comparisons never round.
class TimeStamp {
public:
	using Rep = boost::rational<std::int64_t>;

	constexpr TimeStamp() = default;
	TimeStamp(std::int64_t integer) : value_(integer) {}
	TimeStamp(std::int64_t num, std::int64_t den) : value_(num, den) {}
	explicit TimeStamp(Rep value) : value_(value) {}

	/// Accepts "p", "p/q" (q > 0). Throws std::invalid_argument otherwise.
	static TimeStamp parse(std::string_view text);

	[[nodiscard]] const Rep &rep() const { return value_; }
	[[nodiscard]] std::int64_t numerator() const { return value_.numerator(); }
	[[nodiscard]] std::int64_t denominator() const { return value_.denominator(); }
	[[nodiscard]] bool is_integer() const { return value_.denominator() == 1; }

	/// "p" for integers, "p/q" otherwise.
	[[nodiscard]] std::string to_string() const;

	friend bool operator==(const TimeStamp &a, const TimeStamp &b) { return a.value_ == b.value_; }
	friend std::strong_ordering operator<=>(const TimeStamp &a, const TimeStamp &b)
	{
		if (a.value_ < b.value_)
			return std::strong_ordering::less;
		if (a.value_ == b.value_)
			return std::strong_ordering::equal;
		return std::strong_ordering::greater;
	}

	friend TimeStamp operator+(const TimeStamp &a, const TimeStamp &b) { return TimeStamp(a.value_ + b.value_); }
	friend TimeStamp operator-(const TimeStamp &a, const TimeStamp &b) { return TimeStamp(a.value_ - b.value_); }
	friend TimeStamp operator*(const TimeStamp &a, const TimeStamp &b) { return TimeStamp(a.value_ * b.value_); }
	friend TimeStamp operator/(const TimeStamp &a, const TimeStamp &b) { return TimeStamp(a.value_ / b.value_); }
	TimeStamp operator-() const { return TimeStamp(-value_); }

private:
	Rep value_{0};
};

} // namespace linmon
