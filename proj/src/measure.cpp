#include "framecal/measure.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

namespace framecal {

bool operator==(const Atom& a, const Atom& b) {
    return a.label == b.label && a.weight == b.weight;
}

MeasureSpace::MeasureSpace(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
        throw WouldBeEmpty("a measure space needs at least one atom");
    }
    std::unordered_set<std::string> seen;
    for (const Atom& a : atoms_) {
        if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
            throw NonPositiveWeight("atom '" + a.label + "' has weight " +
                                    std::to_string(a.weight));
        }
        if (!seen.insert(a.label).second) {
            throw DuplicateLabel("atom label '" + a.label + "' appears twice");
        }
    }
}

MeasureSpace MeasureSpace::uniform(std::size_t m, double weight) {
    std::vector<Atom> atoms;
    atoms.reserve(m);
    for (std::size_t i = 0; i < m; ++i) atoms.push_back({"a" + std::to_string(i), weight});
    return MeasureSpace(std::move(atoms));
}

const Atom& MeasureSpace::atom(std::size_t i) const {
    if (i >= atoms_.size()) {
        throw IndexOutOfRange("atom index " + std::to_string(i) +
                              " out of range for " + std::to_string(atoms_.size()) + " atoms");
    }
    return atoms_[i];
}

double MeasureSpace::total_mass() const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += a.weight;
    return s;
}

MeasureSpace MeasureSpace::remove_atom(std::size_t index) const {
    if (index >= atoms_.size()) {
        throw IndexOutOfRange("atom index " + std::to_string(index) +
                              " out of range for " + std::to_string(atoms_.size()) + " atoms");
    }
    if (atoms_.size() == 1) {
        throw WouldBeEmpty("removing the only atom would leave an empty space");
    }
    std::vector<Atom> rest;
    rest.reserve(atoms_.size() - 1);
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (i != index) rest.push_back(atoms_[i]);
    return MeasureSpace(std::move(rest));
}

bool operator==(const MeasureSpace& a, const MeasureSpace& b) {
    return a.atoms_ == b.atoms_;
}

CoefficientVector::CoefficientVector(MeasureSpace space, std::vector<Complex> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (space_.size() != values_.size()) {
        throw DimensionMismatch("coefficient vector has " + std::to_string(values_.size()) +
                                " values for " + std::to_string(space_.size()) + " atoms");
    }
}

CoefficientVector CoefficientVector::zero(const MeasureSpace& space) {
    return CoefficientVector(space, std::vector<Complex>(space.size()));
}

double CoefficientVector::weighted_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += space_.weight(i) * std::norm(values_[i]);
    return std::sqrt(s);
}

namespace {

void require_same_space(const CoefficientVector& a, const CoefficientVector& b) {
    if (a.space() != b.space()) {
        throw SpaceMismatch("coefficient vectors live over different measure spaces");
    }
}

}  // namespace

CoefficientVector& CoefficientVector::operator+=(const CoefficientVector& other) {
    require_same_space(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

CoefficientVector& CoefficientVector::operator-=(const CoefficientVector& other) {
    require_same_space(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

CoefficientVector& CoefficientVector::operator*=(Complex s) {
    for (Complex& z : values_) z *= s;
    return *this;
}

CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b) { a += b; return a; }
CoefficientVector operator-(CoefficientVector a, const CoefficientVector& b) { a -= b; return a; }
CoefficientVector operator*(Complex s, CoefficientVector v) { v *= s; return v; }

Complex weighted_inner(const CoefficientVector& a, const CoefficientVector& b) {
    if (a.space() != b.space()) {
        throw SpaceMismatch("coefficient vectors live over different measure spaces");
    }
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a.space().weight(i) * a[i] * std::conj(b[i]);
    return acc;
}

}  // namespace framecal
