class Endpoint:
    """Represent host and port number for endpoint"""

    def __init__(self, url: str):
        parts = url.rsplit(':', 1)
        self.__url = parts[0] or "127.0.0.1"
        self.__port = int(parts[1]) if len(parts) >= 2 else 8080

    @property
    def url(self) -> str:
        return self.__url

    @property
    def port(self) -> int:
        return self.__port

    def __str__(self) -> str:
        return f"http://{self.__url}:{self.__port}"
