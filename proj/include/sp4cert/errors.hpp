#pragma once

#include <stdexcept>
#include <string>

namespace sp4cert {

// Every failure mode is a distinct type so callers (and the CLI's exit-code
// mapping) can dispatch on it; all derive from Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SP4CERT_ERROR(Name)                  \
    struct Name : Error {                    \
        using Error::Error;                  \
        explicit Name() : Error(#Name) {}    \
    }

SP4CERT_ERROR(ZeroPolynomial);
SP4CERT_ERROR(SingularMatrix);
SP4CERT_ERROR(DependentInputs);
SP4CERT_ERROR(IrrationalSpectrum);
SP4CERT_ERROR(NotInSp4);
SP4CERT_ERROR(NotSemisimple);
SP4CERT_ERROR(NotInBorel);
SP4CERT_ERROR(UnsupportedDimension);
SP4CERT_ERROR(UnrecognizedFamily);
SP4CERT_ERROR(DimensionMismatch);
SP4CERT_ERROR(OutOfCatalog);
SP4CERT_ERROR(ZeroParameter);
SP4CERT_ERROR(NotClosed);

#undef SP4CERT_ERROR

// Parse errors carry an optional 1-based line/column.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    explicit ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

}  // namespace sp4cert
