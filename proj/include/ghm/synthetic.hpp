#ifndef GHM_SYNTHETIC_HPP
#define GHM_SYNTHETIC_HPP

#include "ghm/muntz.hpp"

namespace ghm::synthetic {

/// Two-basis system: the Muntz base with a second basis v = C u for a
/// user-supplied lower-triangular nonsingular C. The dual coefficient core
/// is the base core times C^-1 and shares the base scales, so H = G C*.
struct Params {
    muntz::Params base;
    ExactMatrix connection; // lower triangular, nonzero diagonal

    Params(muntz::Params b, ExactMatrix c) : base(std::move(b)), connection(std::move(c)) {}
    void validate() const;
    int max_order() const { return connection.size() - 1; }
};

OrthoSystemSpec system(const Params& p);

} // namespace ghm::synthetic

#endif
