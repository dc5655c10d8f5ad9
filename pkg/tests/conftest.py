from hypothesis import settings

settings.register_profile("fdlopt", deadline=None, derandomize=True)
settings.load_profile("fdlopt")
