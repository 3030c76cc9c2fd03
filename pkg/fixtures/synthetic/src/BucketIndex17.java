// storage helper for bucket records
class BucketIndex17
{
    @Capacity(limit=64, grow=2)
    private int laneSize = 1;

    private long batchMask = -1;

    public int indexLane( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + laneSize;
    }

    public long mergeBatch( boolean dense, int count )
    {
        long mask = batchMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return indexLane( mask, count ) + mask;
    }

    public int trimAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -1;
        }
        return total;
    }

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.laneSize = picked;
        return this.laneSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.laneSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="bucket", retries=3)
    public String describe( String label, double ratio )
    {
        double scaled = (double) laneSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
