from hypothesis import settings

# property suites run derandomized so every pass is reproducible
settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")
