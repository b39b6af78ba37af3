from hypothesis import HealthCheck, settings

settings.register_profile(
    "catcong",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.data_too_large],
)
settings.load_profile("catcong")
