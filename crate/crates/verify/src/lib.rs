//! Hosts the `acceptance` test target, which runs after every other test binary in the workspace.
