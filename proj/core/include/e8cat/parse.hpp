#pragma once

#include "e8cat/group_elem.hpp"

#include <string>

namespace e8cat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element expression grammar:
///   expr    := atom ('*' atom)*
///   atom    := 'psi(g<i>:<a>:<b>, g<j>:<c>:<d>)' | 'tau(<root>)' | 'x'
///   root    := 'x<i>+x<j>' | 'x<i>-x<j>' | '(s s s s s s s s)/2' with s = + or -
/// Products multiply through a common encoding when one exists and through
/// the resolved Clifford form otherwise.
E8GroupElem parse_element(const std::string& expr);

}  // namespace e8cat
