#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace valgebra {

/// Exact rational scalar over arbitrary-precision integers. Values are
/// always canonical: lowest terms, positive denominator. Every operation
/// is exact; nothing in this library ever rounds.
class Rational {
public:
	Rational() : q_(0) {}
	Rational(int n) : q_(n) {}
	Rational(long n) : q_(static_cast<signed long>(n)) {}
	Rational(long num, long den) {
		if (den == 0)
			throw std::invalid_argument("Rational: zero denominator");
		q_ = mpq_class(num, den);
		q_.canonicalize();
	}

	/// Accepts "p", "-p", "p/q" with an optional leading sign. Rejects
	/// anything else, including a zero denominator.
	static Rational parse(const std::string& text);

	bool is_zero() const { return sgn(q_) == 0; }
	int sign() const { return sgn(q_); }
	bool is_integer() const { return q_.get_den() == 1; }

	/// Canonical text form: "p" when the denominator is 1, else "p/q".
	std::string str() const {
		if (is_integer())
			return q_.get_num().get_str();
		return q_.get_num().get_str() + "/" + q_.get_den().get_str();
	}

	Rational operator-() const { return Rational(mpq_class(-q_)); }

	Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
	Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
	Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
	Rational& operator/=(const Rational& o) {
		if (o.is_zero())
			throw std::invalid_argument("Rational: division by zero");
		q_ /= o.q_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
	friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
	friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
	friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

	friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
		return os << r.str();
	}

	Rational inverse() const {
		if (is_zero())
			throw std::invalid_argument("Rational: inverse of zero");
		return Rational(mpq_class(1) / q_);
	}

private:
	explicit Rational(mpq_class q) : q_(std::move(q)) {}
	mpq_class q_;
};

inline Rational Rational::parse(const std::string& text) {
	std::size_t b = text.find_first_not_of(" \t");
	std::size_t e = text.find_last_not_of(" \t");
	if (b == std::string::npos)
		throw std::invalid_argument("Rational: empty string");
	std::string s = text.substr(b, e - b + 1);

	auto is_int = [](const std::string& t, bool allow_sign) {
		if (t.empty())
			return false;
		std::size_t i = 0;
		if (allow_sign && (t[0] == '+' || t[0] == '-'))
			i = 1;
		if (i == t.size())
			return false;
		for (; i < t.size(); ++i)
			if (t[i] < '0' || t[i] > '9')
				return false;
		return true;
	};

	std::string num = s, den = "1";
	std::size_t slash = s.find('/');
	if (slash != std::string::npos) {
		num = s.substr(0, slash);
		den = s.substr(slash + 1);
	}
	if (!is_int(num, true) || !is_int(den, false))
		throw std::invalid_argument("Rational: malformed value '" + text + "'");
	mpq_class q{mpz_class(num), mpz_class(den)};
	if (q.get_den() == 0)
		throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
	q.canonicalize();
	return Rational(std::move(q));
}

}  // namespace valgebra
