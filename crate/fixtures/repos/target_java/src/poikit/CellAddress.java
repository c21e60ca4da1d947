package poikit;

public class CellAddress {
    private int row;
    private int column;
    private int visits;

    public int collectCount() {
        // each call records one visit to this address
        visits += 1;
        return visits;
    }

    public int getRow() {
        return row;
    }

    public int getColumn() {
        return column;
    }
}
