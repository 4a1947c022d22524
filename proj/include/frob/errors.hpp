#pragma once

#include <stdexcept>

namespace frob {

// Raised when an always-on internal consistency check fails. These checks
// encode conditions that provably cannot occur for valid inputs, so seeing
// one escape means a bug, never a user error. They are never compiled out.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// mod_inverse: the element has no inverse for the given modulus.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// sibling: the parameter pair (1, 2) is its own sibling.
class SelfSibling : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// sibling_diff_mod: the level cannot be derived because the predecessor
// level split its pair exactly in half.
class InvalidLevel : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An oracle refused to run because the input exceeds its resource guard.
class OracleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace frob
