#ifndef GF4SSS_SHARES_HPP
#define GF4SSS_SHARES_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "gf4sss/field.hpp"

namespace gf4sss {

// Participant index (1..n-1) to share value. Partial maps are legal: a
// recovery attempt only needs the groups it uses to be present.
using ShareMap = std::map<int, F4>;

// Shares file format:
//   scheme: linear|additive
//   code: <catalog-name-or-path>
//   P<i> <symbol>     (one line per participant, secret withheld)
struct SharesFile {
    std::string scheme;
    std::string code_ref;
    ShareMap shares;
};

void write_shares(std::ostream& out, const SharesFile& sf);
SharesFile read_shares(std::istream& in);

}  // namespace gf4sss

#endif
