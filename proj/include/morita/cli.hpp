#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morita {

// Batch front end. args excludes the program name. Returns 0 when a verdict
// or report was delivered (whatever the verdict), 2 on usage or parse
// errors, 3 when an emitted witness fails internal re-verification.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace morita
