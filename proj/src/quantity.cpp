#include "vacuum/quantity.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "vacuum/error.hpp"

namespace vacuum {

namespace {

__extension__ typedef __int128 wide;

std::int64_t checked(wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw NumericError("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational make(wide n, wide d)
{
    if (d == 0)
        throw NumericError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide a = n < 0 ? -n : n;
    wide b = d;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    return Rational(checked(n), checked(d));
}

} // namespace

//---------------------------------------------------------------------------//
// Rational
//---------------------------------------------------------------------------//

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw NumericError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    num_ = g > 1 ? n / g : n;
    den_ = g > 1 ? d / g : d;
}

std::string Rational::str() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text)
{
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw InputError("invalid rational '" + text + "'");
        }
        if (used != s.size())
            throw InputError("invalid rational '" + text + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(to_int(text));
    std::int64_t d = to_int(text.substr(slash + 1));
    if (d == 0)
        throw InputError("invalid rational '" + text + "': zero denominator");
    return Rational(to_int(text.substr(0, slash)), d);
}

Rational operator+(Rational a, Rational b)
{
    return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

Rational operator-(Rational a, Rational b) { return a + (-b); }

Rational operator*(Rational a, Rational b)
{
    return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
}

Rational operator/(Rational a, Rational b)
{
    if (b.num_ == 0)
        throw NumericError("rational division by zero");
    return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(Rational a, Rational b)
{
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
}

//---------------------------------------------------------------------------//
// Dimension
//---------------------------------------------------------------------------//

Dimension Dimension::of(int length, int mass, int time, int current)
{
    Exponents e{};
    e[0] = length;
    e[1] = mass;
    e[2] = time;
    e[3] = current;
    return Dimension(e);
}

bool Dimension::dimensionless() const
{
    for (const auto& r : exp_)
        if (!r.is_zero())
            return false;
    return true;
}

std::string Dimension::str() const
{
    static constexpr std::array<const char*, size> symbols = {"m", "kg", "s", "A", "K", "mol", "cd"};
    std::string out;
    for (std::size_t i = 0; i < size; ++i) {
        if (exp_[i].is_zero())
            continue;
        if (!out.empty())
            out += '*';
        out += symbols[i];
        if (exp_[i] != Rational(1)) {
            out += '^';
            out += exp_[i].is_integer() ? exp_[i].str() : "(" + exp_[i].str() + ")";
        }
    }
    return out.empty() ? "1" : out;
}

Dimension operator+(const Dimension& a, const Dimension& b)
{
    Dimension::Exponents e;
    for (std::size_t i = 0; i < Dimension::size; ++i)
        e[i] = a.exp_[i] + b.exp_[i];
    return Dimension(e);
}

Dimension operator-(const Dimension& a, const Dimension& b)
{
    Dimension::Exponents e;
    for (std::size_t i = 0; i < Dimension::size; ++i)
        e[i] = a.exp_[i] - b.exp_[i];
    return Dimension(e);
}

Dimension operator*(const Dimension& a, Rational p)
{
    Dimension::Exponents e;
    for (std::size_t i = 0; i < Dimension::size; ++i)
        e[i] = a.exp_[i] * p;
    return Dimension(e);
}

//---------------------------------------------------------------------------//
// Quantity
//---------------------------------------------------------------------------//

namespace {

double finite_or_throw(double v, const char* op)
{
    if (!std::isfinite(v))
        throw NumericError(std::string("non-finite result in ") + op);
    return v;
}

} // namespace

Quantity::Quantity(double value, const Dimension& d) : value_(finite_or_throw(value, "construction")), dim_(d) {}

double Quantity::in(const Dimension& expected, std::string_view what) const
{
    require_dimension(*this, expected, what);
    return value_;
}

std::string Quantity::str() const
{
    std::ostringstream os;
    os.precision(10);
    os << value_;
    if (!dim_.dimensionless())
        os << ' ' << dim_.str();
    return os.str();
}

Quantity operator*(const Quantity& a, const Quantity& b)
{
    return Quantity(finite_or_throw(a.value_ * b.value_, "multiplication"), a.dim_ + b.dim_);
}

Quantity operator/(const Quantity& a, const Quantity& b)
{
    if (b.value_ == 0.0)
        throw NumericError("division by zero quantity");
    return Quantity(finite_or_throw(a.value_ / b.value_, "division"), a.dim_ - b.dim_);
}

Quantity operator+(const Quantity& a, const Quantity& b)
{
    if (a.dim_ != b.dim_)
        throw DimensionError("cannot add " + a.dim_.str() + " and " + b.dim_.str());
    return Quantity(finite_or_throw(a.value_ + b.value_, "addition"), a.dim_);
}

Quantity operator-(const Quantity& a, const Quantity& b)
{
    if (a.dim_ != b.dim_)
        throw DimensionError("cannot subtract " + b.dim_.str() + " from " + a.dim_.str());
    return Quantity(finite_or_throw(a.value_ - b.value_, "subtraction"), a.dim_);
}

Quantity operator-(const Quantity& a) { return Quantity(-a.value_, a.dim_); }

Quantity operator*(double s, const Quantity& q)
{
    return Quantity(finite_or_throw(s * q.value_, "scaling"), q.dim_);
}

Quantity operator/(const Quantity& q, double s)
{
    if (s == 0.0)
        throw NumericError("division by zero");
    return Quantity(finite_or_throw(q.value_ / s, "scaling"), q.dim_);
}

Quantity q_mul(const Quantity& a, const Quantity& b) { return a * b; }
Quantity q_div(const Quantity& a, const Quantity& b) { return a / b; }
Quantity q_add(const Quantity& a, const Quantity& b) { return a + b; }

Quantity q_pow(const Quantity& a, Rational p)
{
    if (p.is_zero())
        return Quantity::scalar(1.0);
    double v = a.value();
    if (!p.is_integer() && v <= 0.0)
        throw NumericError("fractional power " + p.str() + " of non-positive value");
    double r = p == Rational(1, 2) ? std::sqrt(v) : std::pow(v, p.to_double());
    return Quantity(finite_or_throw(r, "power"), a.dimension() * p);
}

Quantity sqrt(const Quantity& a) { return q_pow(a, Rational(1, 2)); }

Quantity abs(const Quantity& a) { return Quantity(std::fabs(a.value()), a.dimension()); }

void require_dimension(const Quantity& q, const Dimension& expected, std::string_view what)
{
    if (q.dimension() != expected)
        throw DimensionError(std::string(what) + " must have dimension " + expected.str() + ", got "
                             + q.dimension().str());
}

double relative_difference(double a, double b)
{
    double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

//---------------------------------------------------------------------------//
// Energy units
//---------------------------------------------------------------------------//

EnergyUnit parse_energy_unit(std::string_view name)
{
    if (name == "J")
        return EnergyUnit::J;
    if (name == "eV")
        return EnergyUnit::eV;
    if (name == "keV")
        return EnergyUnit::keV;
    if (name == "MeV")
        return EnergyUnit::MeV;
    if (name == "GeV")
        return EnergyUnit::GeV;
    throw InputError("unknown energy unit '" + std::string(name) + "'");
}

std::string_view to_string(EnergyUnit u)
{
    switch (u) {
    case EnergyUnit::J: return "J";
    case EnergyUnit::eV: return "eV";
    case EnergyUnit::keV: return "keV";
    case EnergyUnit::MeV: return "MeV";
    case EnergyUnit::GeV: return "GeV";
    }
    return "?";
}

namespace {

// Power of ten relative to eV; J is handled separately.
int ev_exponent(EnergyUnit u)
{
    switch (u) {
    case EnergyUnit::keV: return 3;
    case EnergyUnit::MeV: return 6;
    case EnergyUnit::GeV: return 9;
    default: return 0;
    }
}

} // namespace

double energy_convert(double value, EnergyUnit from, EnergyUnit to, double joules_per_ev)
{
    if (!(joules_per_ev > 0.0))
        throw NumericError("joules per eV must be positive");
    if (from == to)
        return value;
    double ev = 0.0;
    if (from == EnergyUnit::J)
        ev = value / joules_per_ev;
    else
        ev = value * std::pow(10.0, ev_exponent(from));
    if (to == EnergyUnit::J)
        return finite_or_throw(from == EnergyUnit::J ? value : ev * joules_per_ev, "energy conversion");
    return finite_or_throw(ev / std::pow(10.0, ev_exponent(to)), "energy conversion");
}

} // namespace vacuum
