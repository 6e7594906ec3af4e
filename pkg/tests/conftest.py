from hypothesis import settings

settings.register_profile("qwalk", deadline=None, derandomize=True)
settings.load_profile("qwalk")
