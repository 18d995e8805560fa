from . import (
    test_perm_pattern_core,
    test_perm_pattern_matcher,
    test_perm_pattern_encoder,
    test_perm_pattern_reduction,
    test_perm_pattern_oracle,
    test_perm_pattern_io,
    test_perm_pattern_config,
    test_perm_pattern_commands,
)
