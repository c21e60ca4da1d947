package poikit;

public class Empty {
}
