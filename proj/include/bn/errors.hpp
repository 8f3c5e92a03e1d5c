#pragma once

#include <stdexcept>
#include <string>

namespace bn {

// invalid locus, lattice with Delta >= 0, or a function outside its domain
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// a cell forced to be both contained and not contained
class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed facts or fixture file
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bn
