#ifndef PCN_ERRORS_HH
#define PCN_ERRORS_HH

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcn
{
    enum class ErrorKind
    {
        InvalidArgument,
        Disconnected,
        EmptyLayerSet,
        BudgetExceeded,
        BudgetExhausted,
        QTooSmall,
        OutOfTheoremRange,
        InvalidInitialSet,
        StarMembersPresent,
        InvalidUpperBound,
        TooLarge,
        InvalidCover,
        Parse,
        Io
    };

    auto to_string(ErrorKind kind) -> std::string_view;

    /// All library failures surface as this type; kind() tells callers
    /// which contract was broken.
    class Error : public std::runtime_error
    {
        public:
            Error(ErrorKind kind, const std::string & message) :
                std::runtime_error(std::string(to_string(kind)) + ": " + message),
                _kind(kind),
                _detail(message)
            {
            }

            auto kind() const noexcept -> ErrorKind { return _kind; }
            /// The message without the kind prefix.
            auto detail() const noexcept -> const std::string & { return _detail; }

        private:
            ErrorKind _kind;
            std::string _detail;
    };

    inline auto to_string(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ErrorKind::InvalidArgument:    return "invalid argument";
            case ErrorKind::Disconnected:       return "disconnected graph";
            case ErrorKind::EmptyLayerSet:      return "empty layer set";
            case ErrorKind::BudgetExceeded:     return "vertex budget exceeded";
            case ErrorKind::BudgetExhausted:    return "solve budget exhausted";
            case ErrorKind::QTooSmall:          return "alphabet too small";
            case ErrorKind::OutOfTheoremRange:  return "parameters outside closed-form range";
            case ErrorKind::InvalidInitialSet:  return "invalid initial set";
            case ErrorKind::StarMembersPresent: return "star members present";
            case ErrorKind::InvalidUpperBound:  return "invalid upper bound";
            case ErrorKind::TooLarge:           return "instance too large";
            case ErrorKind::InvalidCover:       return "invalid clique cover";
            case ErrorKind::Parse:              return "parse error";
            case ErrorKind::Io:                 return "i/o error";
        }
        return "error";
    }
}

#endif
