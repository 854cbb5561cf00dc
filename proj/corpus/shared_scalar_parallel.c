int counter;

void main()
{
#pragma omp parallel shared(counter)
    {
        counter = counter + 1;
    }
}
