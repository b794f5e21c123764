#pragma once

#include <string>
#include <vector>

#include "framecal/errors.hpp"
#include "framecal/linalg.hpp"

namespace framecal {

struct Atom {
    std::string label;
    double weight;
};

bool operator==(const Atom& a, const Atom& b);

// Finitely-atomic measure space: an ordered list of atoms with strictly
// positive finite weights and pairwise distinct labels. Atom order is
// insertion order and is part of the space's identity.
class MeasureSpace {
public:
    explicit MeasureSpace(std::vector<Atom> atoms);

    // m atoms labelled "a0", "a1", ... with a common weight.
    static MeasureSpace uniform(std::size_t m, double weight = 1.0);

    std::size_t size() const { return atoms_.size(); }
    const Atom& atom(std::size_t i) const;
    double weight(std::size_t i) const { return atom(i).weight; }
    const std::string& label(std::size_t i) const { return atom(i).label; }

    // Sum of weights, accumulated left to right.
    double total_mass() const;

    // Copy of this space with one atom dropped; the remaining atoms keep
    // their relative order. Removing the last atom raises WouldBeEmpty.
    MeasureSpace remove_atom(std::size_t index) const;

    friend bool operator==(const MeasureSpace& a, const MeasureSpace& b);
    friend bool operator!=(const MeasureSpace& a, const MeasureSpace& b) { return !(a == b); }

private:
    std::vector<Atom> atoms_;
};

// Element of the weighted L^2 space over a measure space: one complex value
// per atom, in atom order.
class CoefficientVector {
public:
    CoefficientVector(MeasureSpace space, std::vector<Complex> values);

    static CoefficientVector zero(const MeasureSpace& space);

    const MeasureSpace& space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    Complex& operator[](std::size_t i) { return values_[i]; }
    const Complex& operator[](std::size_t i) const { return values_[i]; }

    // sqrt(sum_i w_i |v_i|^2)
    double weighted_norm() const;

    CoefficientVector& operator+=(const CoefficientVector& other);
    CoefficientVector& operator-=(const CoefficientVector& other);
    CoefficientVector& operator*=(Complex s);

private:
    MeasureSpace space_;
    std::vector<Complex> values_;
};

CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b);
CoefficientVector operator-(CoefficientVector a, const CoefficientVector& b);
CoefficientVector operator*(Complex s, CoefficientVector v);

// Weighted inner product sum_i w_i a_i conj(b_i); linear in the first slot.
Complex weighted_inner(const CoefficientVector& a, const CoefficientVector& b);

}  // namespace framecal
